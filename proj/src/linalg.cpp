#include "pentagon/linalg.hpp"

namespace pentagon {

bool Vec::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

Vec Vec::lifted(long m2) const {
  Vec r(dim, m2);
  for (int i = 0; i < dim; ++i) r[i] = e[static_cast<size_t>(i)].lifted(m2);
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) fail(errc::dimension_mismatch, "vector dimensions differ");
  Vec r = a;
  for (int i = 0; i < r.dim; ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) fail(errc::dimension_mismatch, "vector dimensions differ");
  Vec r = a;
  for (int i = 0; i < r.dim; ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Cyc& c, const Vec& v) {
  Vec r = v;
  for (int i = 0; i < r.dim; ++i) r[i] *= c;
  return r;
}

Mat Mat::identity(int n, long m) {
  Mat r(n, n, m);
  for (int i = 0; i < n; ++i) r.set(i, i, Cyc::one(m));
  return r;
}

void Mat::set(int i, int j, const Cyc& v) {
  if (v.is_zero())
    a.erase({i, j});
  else
    a[{i, j}] = v;
}

const Cyc* Mat::find(int i, int j) const {
  auto it = a.find({i, j});
  return it == a.end() ? nullptr : &it->second;
}

Cyc Mat::get(int i, int j) const {
  const Cyc* p = find(i, j);
  return p ? *p : Cyc::zero(m);
}

Vec Mat::col(int j) const {
  Vec v(rows, m);
  for (auto it = a.lower_bound({0, 0}); it != a.end(); ++it)
    if (it->first.second == j) v[it->first.first] = it->second;
  return v;
}

Vec Mat::row(int i) const {
  Vec v(cols, m);
  for (auto it = a.lower_bound({i, 0}); it != a.end() && it->first.first == i; ++it)
    v[it->first.second] = it->second;
  return v;
}

Mat Mat::transposed() const {
  Mat r(cols, rows, m);
  for (const auto& [ij, v] : a) r.a[{ij.second, ij.first}] = v;
  return r;
}

Mat Mat::lifted(long m2) const {
  Mat r(rows, cols, m2);
  for (const auto& [ij, v] : a) r.a[ij] = v.lifted(m2);
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) fail(errc::dimension_mismatch, "matrix product shapes");
  Mat r(a.rows, b.cols, a.m);
  for (const auto& [ij, va] : a.a) {
    auto [i, k] = ij;
    auto it = b.a.lower_bound({k, 0});
    for (; it != b.a.end() && it->first.first == k; ++it) {
      Cyc& dst = r.a.try_emplace({i, it->first.second}, Cyc::zero(r.m)).first->second;
      dst += va * it->second;
    }
  }
  for (auto it = r.a.begin(); it != r.a.end();)
    it = it->second.is_zero() ? r.a.erase(it) : std::next(it);
  return r;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols != v.dim) fail(errc::dimension_mismatch, "matrix-vector shapes");
  Vec r(a.rows, a.m);
  for (const auto& [ij, va] : a.a) {
    const Cyc& x = v[ij.second];
    if (!x.is_zero()) r[ij.first] += va * x;
  }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r = a;
  for (const auto& [ij, v] : b.a) {
    Cyc& dst = r.a.try_emplace(ij, Cyc::zero(r.m)).first->second;
    dst += v;
    if (dst.is_zero()) r.a.erase(ij);
  }
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat r = a;
  for (const auto& [ij, v] : b.a) {
    Cyc& dst = r.a.try_emplace(ij, Cyc::zero(r.m)).first->second;
    dst -= v;
    if (dst.is_zero()) r.a.erase(ij);
  }
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows * b.rows, a.cols * b.cols, a.m);
  for (const auto& [ij, va] : a.a)
    for (const auto& [kl, vb] : b.a)
      r.a[{ij.first * b.rows + kl.first, ij.second * b.cols + kl.second}] = va * vb;
  return r;
}

void Tensor3::set(int i, int j, int k, const Cyc& v) {
  if (v.is_zero())
    a.erase({i, j, k});
  else
    a[{i, j, k}] = v;
}

Cyc Tensor3::get(int i, int j, int k) const {
  auto it = a.find({i, j, k});
  return it == a.end() ? Cyc::zero(m) : it->second;
}

Tensor3 Tensor3::lifted(long m2) const {
  Tensor3 r(d, m2);
  for (const auto& [ijk, v] : a) r.a[ijk] = v.lifted(m2);
  return r;
}

namespace {

// Bareiss fraction-free elimination to row echelon form on a dense working
// copy; divisions by the previous pivot are exact.  Returns pivot columns.
std::vector<int> bareiss_echelon(std::vector<std::vector<Cyc>>& w, long m) {
  std::vector<int> pivots;
  if (w.empty()) return pivots;
  size_t rows = w.size(), cols = w[0].size();
  Cyc prev = Cyc::one(m);
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t p = r;
    while (p < rows && w[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(w[p], w[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        w[i][j] = (w[r][col] * w[i][j] - w[i][col] * w[r][j]) / prev;
      w[i][col] = Cyc::zero(m);
    }
    prev = w[r][col];
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Vec> solve_in_span(const std::vector<Vec>& vectors, const Vec& target) {
  size_t k = vectors.size();
  int dim = target.dim;
  long m = target.m;
  for (const auto& v : vectors)
    if (v.dim != dim) fail(errc::dimension_mismatch, "solve_in_span: mixed dimensions");
  // Augmented system: columns are the vectors, last column the target.
  std::vector<std::vector<Cyc>> w(static_cast<size_t>(dim),
                                  std::vector<Cyc>(k + 1, Cyc::zero(m)));
  for (size_t j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) w[static_cast<size_t>(i)][j] = vectors[j][i];
  for (int i = 0; i < dim; ++i) w[static_cast<size_t>(i)][k] = target[i];
  std::vector<int> pivots = bareiss_echelon(w, m);
  // Inconsistent iff the augmented column is a pivot.
  if (!pivots.empty() && pivots.back() == static_cast<int>(k)) return std::nullopt;
  // Back-substitution on echelon rows.
  Vec sol(static_cast<int>(k), m);
  for (size_t i = pivots.size(); i-- > 0;) {
    size_t col = static_cast<size_t>(pivots[i]);
    Cyc rhs = w[i][k];
    for (size_t j = col + 1; j < k; ++j)
      if (!w[i][j].is_zero()) rhs -= w[i][j] * sol[static_cast<int>(j)];
    sol[static_cast<int>(col)] = rhs / w[i][col];
  }
  return sol;
}

int rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  int dim = vectors[0].dim;
  long m = vectors[0].m;
  std::vector<std::vector<Cyc>> w;
  for (const auto& v : vectors) {
    if (v.dim != dim) fail(errc::dimension_mismatch, "rank: mixed dimensions");
    w.push_back(v.e);
  }
  return static_cast<int>(bareiss_echelon(w, m).size());
}

bool is_invertible(const Mat& p) {
  if (p.rows != p.cols) return false;
  std::vector<Vec> cols;
  for (int j = 0; j < p.cols; ++j) cols.push_back(p.col(j));
  return rank(cols) == p.rows;
}

Mat inverse(const Mat& p) {
  if (p.rows != p.cols) fail(errc::singular_matrix, "inverse of non-square matrix");
  int n = p.rows;
  long m = p.m;
  // Gauss-Jordan with exact field arithmetic on [P | I].
  std::vector<std::vector<Cyc>> w(static_cast<size_t>(n),
                                  std::vector<Cyc>(2 * static_cast<size_t>(n), Cyc::zero(m)));
  for (const auto& [ij, v] : p.a) w[static_cast<size_t>(ij.first)][static_cast<size_t>(ij.second)] = v;
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = Cyc::one(m);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && w[static_cast<size_t>(piv)][static_cast<size_t>(col)].is_zero()) ++piv;
    if (piv == n) fail(errc::singular_matrix, "singular matrix");
    std::swap(w[static_cast<size_t>(piv)], w[static_cast<size_t>(col)]);
    Cyc inv = w[static_cast<size_t>(col)][static_cast<size_t>(col)].inverse();
    for (int j = col; j < 2 * n; ++j) w[static_cast<size_t>(col)][static_cast<size_t>(j)] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Cyc f = w[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = col; j < 2 * n; ++j)
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * w[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  Mat r(n, n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, w[static_cast<size_t>(i)][static_cast<size_t>(n + j)]);
  return r;
}

std::optional<std::pair<int, int>> pure_tensor_position(const Vec& v) {
  int d = 0;
  while (d * d < v.dim) ++d;
  if (d * d != v.dim)
    fail(errc::not_a_square_dimension, "pure_tensor_position: dim is not a square");
  std::optional<std::pair<int, int>> pos;
  for (int i = 0; i < v.dim; ++i) {
    if (v[i].is_zero()) continue;
    if (pos) return std::nullopt;  // two nonzeros
    if (v[i] != Cyc::one(v.m)) return std::nullopt;
    pos = {i / d, i % d};
  }
  return pos;
}

std::vector<Vec> kernel_basis(const std::vector<Vec>& equations, int unknowns, long m) {
  std::vector<std::vector<Cyc>> w;
  for (const auto& eq : equations) {
    if (eq.dim != unknowns) fail(errc::dimension_mismatch, "kernel_basis: equation size");
    w.push_back(eq.e);
  }
  std::vector<int> pivots = w.empty() ? std::vector<int>{} : bareiss_echelon(w, m);
  std::vector<bool> is_pivot(static_cast<size_t>(unknowns), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v(unknowns, m);
    v[free] = Cyc::one(m);
    for (size_t i = pivots.size(); i-- > 0;) {
      int col = pivots[i];
      Cyc rhs = Cyc::zero(m);
      for (int j = col + 1; j < unknowns; ++j)
        if (!w[i][static_cast<size_t>(j)].is_zero()) rhs -= w[i][static_cast<size_t>(j)] * v[j];
      v[col] = rhs / w[i][static_cast<size_t>(col)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pentagon
