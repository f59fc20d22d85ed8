#include "pentagon/finite_group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

namespace pentagon {

FiniteGroup::FiniteGroup(int n, std::vector<int> cayley) : n_(n), t_(std::move(cayley)) {
  if (n <= 0 || t_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    fail(errc::bad_input, "FiniteGroup: table size must be n*n");
  for (int v : t_)
    if (v < 0 || v >= n) fail(errc::bad_input, "FiniteGroup: table entry out of range");
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      e_ = e;
      break;
    }
  }
  if (e_ < 0) fail(errc::bad_input, "FiniteGroup: no identity element");
  inv_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == e_ && mul(b, a) == e_) {
        inv_[static_cast<size_t>(a)] = b;
        break;
      }
    if (inv_[static_cast<size_t>(a)] < 0)
      fail(errc::bad_input, "FiniteGroup: element without inverse: " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(errc::bad_input, "FiniteGroup: associativity fails at (" + std::to_string(a) +
                                    "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != e_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
  return static_cast<int>(e);
}

int FiniteGroup::power(int a, long k) const {
  int ord = element_order(a);
  k %= ord;
  if (k < 0) k += ord;
  int r = e_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<int> FiniteGroup::closure(std::vector<int> gens) const {
  std::set<int> s{e_};
  std::vector<int> frontier{e_};
  for (int g : gens)
    if (s.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : s) {
        for (int y : {mul(x, g), mul(g, x)})
          if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(e_)) return false;
  for (int a : elems)
    for (int b : elems)
      if (!s.count(mul(a, b))) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv{e_};
  seen.insert(triv);
  queue.push_back(triv);
  // BFS: extend each known subgroup by one extra generator.
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> h = queue[qi];
    for (int g = 0; g < n_; ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> gens = h;
      gens.push_back(g);
      std::vector<int> k = closure(gens);
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<std::vector<int>> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup) const {
  std::set<int> s(subgroup.begin(), subgroup.end());
  for (int g = 0; g < n_; ++g)
    for (int h : subgroup)
      if (!s.count(mul(mul(g, h), inverse(g)))) return false;
  return true;
}

FiniteGroup FiniteGroup::restricted_to(const std::vector<int>& elems) const {
  int k = static_cast<int>(elems.size());
  std::vector<int> pos(static_cast<size_t>(n_), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;
  std::vector<int> table(static_cast<size_t>(k) * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = mul(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);
      if (pos[static_cast<size_t>(p)] < 0)
        fail(errc::bad_input, "restricted_to: set is not closed");
      table[static_cast<size_t>(i * k + j)] = pos[static_cast<size_t>(p)];
    }
  return FiniteGroup(k, std::move(table));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<int> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i * n + j)] = (i + j) % n;
  return FiniteGroup(n, std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order() * b.order();
  std::vector<int> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          t[static_cast<size_t>(idx(x1, y1) * n + idx(x2, y2))] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup(n, std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // r^i f^j with index j*n + i
  int order = 2 * n;
  auto idx = [&](int i, int j) { return j * n + i; };
  std::vector<int> t(static_cast<size_t>(order) * static_cast<size_t>(order));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < n; ++i2) {
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          t[static_cast<size_t>(idx(i1, j1) * order + idx(i2, j2))] = idx(i, j);
        }
  return FiniteGroup(order, std::move(t));
}

FiniteGroup FiniteGroup::quaternion8() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k
  auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  auto mulq = [&](int a, int b) {
    int ua = a / 2, sa = a % 2 ? -1 : 1;
    int ub = b / 2, sb = b % 2 ? -1 : 1;
    // unit table for 1,i,j,k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return enc(unit[ua][ub], sa * sb * sign[ua][ub]);
  };
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[static_cast<size_t>(a * 8 + b)] = mulq(a, b);
  return FiniteGroup(8, std::move(t));
}

FiniteGroup FiniteGroup::alternating4() {
  // Even permutations of 4 points, enumerated in lexicographic order.
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto find = [&](const std::array<int, 4>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> t(144);
  for (size_t a = 0; a < 12; ++a)
    for (size_t b = 0; b < 12; ++b) {
      std::array<int, 4> c;
      for (int i = 0; i < 4; ++i)
        c[static_cast<size_t>(i)] = perms[a][static_cast<size_t>(perms[b][static_cast<size_t>(i)])];
      t[a * 12 + b] = find(c);
    }
  return FiniteGroup(12, std::move(t));
}

FiniteGroup FiniteGroup::dicyclic3() {
  // a^i b^j, i < 6, j < 2, with b^2 = a^3 and b a = a^-1 b; index i + 6j.
  auto idx = [](int i, int j) { return i + 6 * j; };
  std::vector<int> t(144);
  for (int i1 = 0; i1 < 6; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 6; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i, j;
          if (j1 == 0) {
            i = (i1 + i2) % 6;
            j = j2;
          } else {
            i = ((i1 - i2) % 6 + 6) % 6;
            if (j2 == 0) {
              j = 1;
            } else {
              i = (i + 3) % 6;
              j = 0;
            }
          }
          t[static_cast<size_t>(idx(i1, j1) * 12 + idx(i2, j2))] = idx(i, j);
        }
  return FiniteGroup(12, std::move(t));
}

std::optional<std::vector<int>> FiniteGroup::isomorphism_to(const FiniteGroup& other) const {
  if (n_ != other.order()) return std::nullopt;
  // Order profiles must agree.
  std::vector<int> mine(static_cast<size_t>(n_)), theirs(static_cast<size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    mine[static_cast<size_t>(a)] = element_order(a);
    theirs[static_cast<size_t>(a)] = other.element_order(a);
  }
  {
    auto ms = mine, ts = theirs;
    std::sort(ms.begin(), ms.end());
    std::sort(ts.begin(), ts.end());
    if (ms != ts) return std::nullopt;
  }
  std::vector<int> f(static_cast<size_t>(n_), -1);
  std::vector<bool> used(static_cast<size_t>(n_), false);
  auto consistent = [&](int a) {
    for (int b = 0; b < n_; ++b) {
      if (f[static_cast<size_t>(b)] < 0) continue;
      int ab = mul(a, b), ba = mul(b, a);
      if (f[static_cast<size_t>(ab)] >= 0 &&
          f[static_cast<size_t>(ab)] != other.mul(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]))
        return false;
      if (f[static_cast<size_t>(ba)] >= 0 &&
          f[static_cast<size_t>(ba)] != other.mul(f[static_cast<size_t>(b)], f[static_cast<size_t>(a)]))
        return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int a) -> bool {
    if (a == n_) {
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          if (f[static_cast<size_t>(mul(x, y))] !=
              other.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
            return false;
      return true;
    }
    if (f[static_cast<size_t>(a)] >= 0) return rec(a + 1);
    for (int img = 0; img < n_; ++img) {
      if (used[static_cast<size_t>(img)]) continue;
      if (theirs[static_cast<size_t>(img)] != mine[static_cast<size_t>(a)]) continue;
      f[static_cast<size_t>(a)] = img;
      used[static_cast<size_t>(img)] = true;
      if (consistent(a) && rec(a + 1)) return true;
      f[static_cast<size_t>(a)] = -1;
      used[static_cast<size_t>(img)] = false;
    }
    return false;
  };
  f[static_cast<size_t>(e_)] = other.identity();
  used[static_cast<size_t>(other.identity())] = true;
  if (rec(0)) return f;
  return std::nullopt;
}

}  // namespace pentagon
