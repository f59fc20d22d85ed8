#include "pentagon/hopf.hpp"

#include <numeric>
#include <sstream>

namespace pentagon {

FinHopf FinHopf::lifted(long m2) const {
  FinHopf r;
  r.d = d;
  r.m = m2;
  r.unit = unit.lifted(m2);
  r.counit = counit.lifted(m2);
  r.mult = mult.lifted(m2);
  r.comult = comult.lifted(m2);
  if (antipode) r.antipode = antipode->lifted(m2);
  return r;
}

Vec apply_mult(const FinHopf& h, const Vec& u, const Vec& v) {
  Vec r(h.d, h.m);
  for (const auto& [ijk, c] : h.mult.a) {
    const Cyc& ui = u[ijk[0]];
    if (ui.is_zero()) continue;
    const Cyc& vj = v[ijk[1]];
    if (vj.is_zero()) continue;
    r[ijk[2]] += c * ui * vj;
  }
  return r;
}

Vec apply_comult(const FinHopf& h, const Vec& u) {
  Vec r(h.d * h.d, h.m);
  for (const auto& [ijk, c] : h.comult.a) {
    const Cyc& ui = u[ijk[0]];
    if (ui.is_zero()) continue;
    r[ijk[1] * h.d + ijk[2]] += c * ui;
  }
  return r;
}

bool AxiomReport::all_ok() const {
  for (const auto& it : items)
    if (!it.ok) return false;
  return true;
}

std::string AxiomReport::first_failure() const {
  for (const auto& it : items)
    if (!it.ok) return it.name + (it.witness.empty() ? "" : " at " + it.witness);
  return {};
}

namespace {

Vec basis_vec(int d, long m, int i) {
  Vec v(d, m);
  v[i] = Cyc::one(m);
  return v;
}

std::string idx2(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

AxiomReport verify_hopf(const FinHopf& h) {
  AxiomReport rep;
  int d = h.d;
  long m = h.m;
  auto add = [&](std::string name, bool ok, std::string witness = {}) {
    rep.items.push_back({std::move(name), ok, std::move(witness)});
  };

  std::vector<Vec> basis;
  for (int i = 0; i < d; ++i) basis.push_back(basis_vec(d, m, i));
  std::vector<std::vector<Vec>> prod(static_cast<size_t>(d),
                                     std::vector<Vec>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      prod[static_cast<size_t>(i)][static_cast<size_t>(j)] = apply_mult(h, basis[i], basis[j]);

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        for (int k = 0; k < d && ok; ++k) {
          Vec lhs = apply_mult(h, prod[static_cast<size_t>(i)][static_cast<size_t>(j)], basis[k]);
          Vec rhs = apply_mult(h, basis[i], prod[static_cast<size_t>(j)][static_cast<size_t>(k)]);
          if (!(lhs == rhs)) {
            ok = false;
            w = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
          }
        }
    add("associativity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int j = 0; j < d && ok; ++j) {
      if (!(apply_mult(h, h.unit, basis[j]) == basis[j]) ||
          !(apply_mult(h, basis[j], h.unit) == basis[j])) {
        ok = false;
        w = std::to_string(j);
      }
    }
    add("unit", ok, w);
  }
  {
    // (Delta (x) id)Delta = (id (x) Delta)Delta
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i) {
      std::map<std::array<int, 3>, Cyc> lhs, rhs;
      for (const auto& [pjr, c] : h.comult.a) {
        if (pjr[0] != i) continue;
        int p = pjr[1], r = pjr[2];
        for (const auto& [pk, c2] : h.comult.a) {
          if (pk[0] == p) {
            Cyc& dst = lhs.try_emplace({pk[1], pk[2], r}, Cyc::zero(m)).first->second;
            dst += c * c2;
          }
          if (pk[0] == r) {
            Cyc& dst = rhs.try_emplace({p, pk[1], pk[2]}, Cyc::zero(m)).first->second;
            dst += c * c2;
          }
        }
      }
      for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
      for (auto it = rhs.begin(); it != rhs.end();)
        it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
      if (!(lhs == rhs)) {
        ok = false;
        w = std::to_string(i);
      }
    }
    add("coassociativity", ok, w);
  }
  {
    // (eps (x) id)Delta = id = (id (x) eps)Delta
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i) {
      Vec left(d, m), right(d, m);
      for (const auto& [ijk, c] : h.comult.a) {
        if (ijk[0] != i) continue;
        left[ijk[2]] += c * h.counit[ijk[1]];
        right[ijk[1]] += c * h.counit[ijk[2]];
      }
      if (!(left == basis[i]) || !(right == basis[i])) {
        ok = false;
        w = std::to_string(i);
      }
    }
    add("counit", ok, w);
  }
  {
    // Delta is an algebra map
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        Vec lhs = apply_comult(h, prod[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        Vec di = apply_comult(h, basis[i]), dj = apply_comult(h, basis[j]);
        Vec rhs(d * d, m);
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            const Cyc& x = di[a * d + b];
            if (x.is_zero()) continue;
            for (int c = 0; c < d; ++c)
              for (int e = 0; e < d; ++e) {
                const Cyc& y = dj[c * d + e];
                if (y.is_zero()) continue;
                const Vec& p1 = prod[static_cast<size_t>(a)][static_cast<size_t>(c)];
                const Vec& p2 = prod[static_cast<size_t>(b)][static_cast<size_t>(e)];
                Cyc xy = x * y;
                for (int p = 0; p < d; ++p) {
                  if (p1[p].is_zero()) continue;
                  for (int q = 0; q < d; ++q)
                    if (!p2[q].is_zero()) rhs[p * d + q] += xy * p1[p] * p2[q];
                }
              }
          }
        if (!(lhs == rhs)) {
          ok = false;
          w = idx2(i, j);
        }
      }
    if (ok) {
      Vec d1 = apply_comult(h, h.unit), want(d * d, m);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) want[p * d + q] = h.unit[p] * h.unit[q];
      if (!(d1 == want)) {
        ok = false;
        w = "Delta(1)";
      }
    }
    add("comult is algebra map", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        const Vec& p = prod[static_cast<size_t>(i)][static_cast<size_t>(j)];
        Cyc lhs = Cyc::zero(m);
        for (int k = 0; k < d; ++k) lhs += p[k] * h.counit[k];
        if (lhs != h.counit[i] * h.counit[j]) {
          ok = false;
          w = idx2(i, j);
        }
      }
    if (ok) {
      Cyc e1 = Cyc::zero(m);
      for (int k = 0; k < d; ++k) e1 += h.unit[k] * h.counit[k];
      if (e1 != Cyc::one(m)) {
        ok = false;
        w = "eps(1)";
      }
    }
    add("counit is algebra map", ok, w);
  }
  if (h.antipode) {
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i) {
      Vec di = apply_comult(h, basis[i]);
      Vec left(d, m), right(d, m);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const Cyc& x = di[a * d + b];
          if (x.is_zero()) continue;
          left = left + x * apply_mult(h, *h.antipode * basis[a], basis[b]);
          right = right + x * apply_mult(h, basis[a], *h.antipode * basis[b]);
        }
      Vec want = h.counit[i] * h.unit;
      if (!(left == want) || !(right == want)) {
        ok = false;
        w = std::to_string(i);
      }
    }
    add("antipode", ok, w);
  }
  return rep;
}

LinearSolution phi_map(const FinHopf& h) {
  int d = h.d;
  LinearSolution f;
  f.d = d;
  f.tag = eq_tag::rpe;
  f.mat = Mat(d * d, d * d, h.m);
  // Phi[(p,k),(i,j)] = sum_q Delta_i^{pq} mult_{qj}^k
  for (const auto& [ipq, c] : h.comult.a) {
    int i = ipq[0], p = ipq[1], q = ipq[2];
    for (const auto& [qjk, c2] : h.mult.a) {
      if (qjk[0] != q) continue;
      int j = qjk[1], k = qjk[2];
      Cyc& dst = f.mat.a.try_emplace({p * d + k, i * d + j}, Cyc::zero(h.m)).first->second;
      dst += c * c2;
    }
  }
  for (auto it = f.mat.a.begin(); it != f.mat.a.end();)
    it = it->second.is_zero() ? f.mat.a.erase(it) : std::next(it);
  if (!verify_linear(f, eq_tag::rpe))
    fail(errc::structure_violation, "phi_map: Phi_H does not satisfy the RPE");
  if (h.antipode) {
    // Psi[(p,k),(i,j)] = sum_{q,r} Delta_i^{pq} S_{rq} mult_{rj}^k
    Mat psi(d * d, d * d, h.m);
    for (const auto& [ipq, c] : h.comult.a) {
      int i = ipq[0], p = ipq[1], q = ipq[2];
      Vec sq = h.antipode->col(q);
      for (int r = 0; r < d; ++r) {
        if (sq[r].is_zero()) continue;
        for (const auto& [rjk, c2] : h.mult.a) {
          if (rjk[0] != r) continue;
          Cyc& dst =
              psi.a.try_emplace({p * d + rjk[2], i * d + rjk[1]}, Cyc::zero(h.m)).first->second;
          dst += c * sq[r] * c2;
        }
      }
    }
    for (auto it = psi.a.begin(); it != psi.a.end();)
      it = it->second.is_zero() ? psi.a.erase(it) : std::next(it);
    Mat id = Mat::identity(d * d, h.m);
    if (!(f.mat * psi == id) || !(psi * f.mat == id))
      fail(errc::structure_violation, "phi_map: antipode inverse check failed");
  }
  return f;
}

FinHopf change_basis(const FinHopf& h, const Mat& p) {
  if (p.rows != h.d || p.cols != h.d)
    fail(errc::dimension_mismatch, "change_basis: basis matrix must be d x d");
  Mat pm = p.m == h.m ? p : p.lifted(h.m);
  Mat pinv = inverse(pm);
  int d = h.d;
  long m = h.m;
  FinHopf r;
  r.d = d;
  r.m = m;
  r.unit = pinv * h.unit;
  r.counit = Vec(d, m);
  std::vector<Vec> cols;
  for (int j = 0; j < d; ++j) cols.push_back(pm.col(j));
  for (int i = 0; i < d; ++i) {
    Cyc e = Cyc::zero(m);
    for (int j = 0; j < d; ++j) e += h.counit[j] * cols[static_cast<size_t>(i)][j];
    r.counit[i] = e;
  }
  r.mult = Tensor3(d, m);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec w = pinv * apply_mult(h, cols[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
      for (int k = 0; k < d; ++k)
        if (!w[k].is_zero()) r.mult.a[{i, j, k}] = w[k];
    }
  r.comult = Tensor3(d, m);
  for (int i = 0; i < d; ++i) {
    Vec w = apply_comult(h, cols[static_cast<size_t>(i)]);
    // Y = Pinv W Pinv^T on the d x d reshape of w, as two products
    Vec t(d * d, m);
    for (const auto& [rc, v] : pinv.a)
      for (int k = 0; k < d; ++k) {
        const Cyc& wv = w[rc.second * d + k];
        if (!wv.is_zero()) t[rc.first * d + k] += v * wv;
      }
    Vec y(d * d, m);
    for (const auto& [rc, v] : pinv.a)
      for (int p = 0; p < d; ++p) {
        const Cyc& tv = t[p * d + rc.second];
        if (!tv.is_zero()) y[p * d + rc.first] += tv * v;
      }
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (!y[a * d + b].is_zero()) r.comult.a[{i, a, b}] = y[a * d + b];
  }
  if (h.antipode) r.antipode = pinv * *h.antipode * pm;
  return r;
}

std::variant<FiniteSolution, PhiBasisFailure> is_phi_set_theoretic(const FinHopf& h,
                                                                   const Mat& basis) {
  int d = h.d;
  long m = h.m;
  Mat pm = basis.m == m ? basis : basis.lifted(m);
  Mat pinv = inverse(pm);
  std::vector<Vec> cols;
  for (int j = 0; j < d; ++j) cols.push_back(pm.col(j));
  // Pure tensors are exactly the rank-1 reshapes, so each image is factored
  // as x (x) y and the factors are located in the candidate basis; the full
  // coefficient vector is only materialised for a failure witness.
  auto coefficients_of = [&](const Vec& w) {
    Vec t(d * d, m);  // T = Pinv W
    for (const auto& [rc, v] : pinv.a)
      for (int k = 0; k < d; ++k) {
        const Cyc& wv = w[rc.second * d + k];
        if (!wv.is_zero()) t[rc.first * d + k] += v * wv;
      }
    Vec y(d * d, m);  // Y = T Pinv^T
    for (const auto& [rc, v] : pinv.a)
      for (int p = 0; p < d; ++p) {
        const Cyc& tv = t[p * d + rc.second];
        if (!tv.is_zero()) y[p * d + rc.first] += tv * v;
      }
    return y;
  };
  std::vector<std::pair<int, int>> table(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    Vec du = apply_comult(h, cols[static_cast<size_t>(i)]);
    for (int j = 0; j < d; ++j) {
      // W[p][k] = sum_q du[(p,q)] (b_q v)[k]
      Vec w(d * d, m);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          const Cyc& x = du[p * d + q];
          if (x.is_zero()) continue;
          for (const auto& [qtk, c2] : h.mult.a) {
            if (qtk[0] != q) continue;
            const Cyc& vt = cols[static_cast<size_t>(j)][qtk[1]];
            if (!vt.is_zero()) w[p * d + qtk[2]] += x * c2 * vt;
          }
        }
      // rank-1 factorisation W = x y^T, else not a pure tensor
      int r0 = -1, c0 = -1;
      for (int p = 0; p < d * d && r0 < 0; ++p)
        if (!w[p].is_zero()) {
          r0 = p / d;
          c0 = p % d;
        }
      if (r0 < 0) return PhiBasisFailure{i, j, Vec(d * d, m)};  // zero image
      Vec xf(d, m), yf(d, m);
      const Cyc& pivot = w[r0 * d + c0];
      for (int p = 0; p < d; ++p) xf[p] = w[p * d + c0];
      for (int k = 0; k < d; ++k) yf[k] = w[r0 * d + k] / pivot;
      bool rank1 = true;
      for (int p = 0; p < d && rank1; ++p)
        for (int k = 0; k < d && rank1; ++k)
          if (!(w[p * d + k] == xf[p] * yf[k])) rank1 = false;
      if (!rank1) return PhiBasisFailure{i, j, coefficients_of(w)};
      // locate the factors in the candidate basis: Pinv x and Pinv y must be
      // delta vectors whose scalars multiply to exactly 1
      Vec a = pinv * xf, b = pinv * yf;
      int ia = -1, ib = -1;
      for (int p = 0; p < d; ++p) {
        if (!a[p].is_zero()) {
          if (ia >= 0) return PhiBasisFailure{i, j, coefficients_of(w)};
          ia = p;
        }
        if (!b[p].is_zero()) {
          if (ib >= 0) return PhiBasisFailure{i, j, coefficients_of(w)};
          ib = p;
        }
      }
      if (ia < 0 || ib < 0 || !(a[ia] * b[ib] == Cyc::one(m)))
        return PhiBasisFailure{i, j, coefficients_of(w)};
      table[static_cast<size_t>(i * d + j)] = {ia, ib};
    }
  }
  FiniteSolution s(d, std::move(table), eq_tag::rpe);
  if (!verify_equation(s, eq_tag::rpe))
    fail(errc::structure_violation,
         "restriction of Phi to a preserved basis failed the RPE (implementation bug)");
  return s;
}

namespace {

PositivityReport::Item positivity_of(std::string name, const std::vector<std::pair<std::string, Cyc>>& constants) {
  PositivityReport::Item item;
  item.name = std::move(name);
  item.verdict = positivity::positive;
  for (const auto& [where, c] : constants) {
    auto v = as_nonnegative_rational(c);
    if (v.value) continue;
    item.verdict = v.rational ? positivity::negative : positivity::indeterminate;
    item.witness = where + " = " + c.str();
    return item;
  }
  return item;
}

}  // namespace

PositivityReport positivity_check(const FinHopf& h, const Mat& basis) {
  FinHopf t = change_basis(h, basis);
  PositivityReport rep;
  std::vector<std::pair<std::string, Cyc>> cs;
  for (int i = 0; i < t.d; ++i)
    if (!t.unit[i].is_zero()) cs.emplace_back("unit[" + std::to_string(i) + "]", t.unit[i]);
  rep.unit = positivity_of("unit", cs);
  cs.clear();
  for (int i = 0; i < t.d; ++i)
    if (!t.counit[i].is_zero()) cs.emplace_back("eps[" + std::to_string(i) + "]", t.counit[i]);
  rep.counit = positivity_of("counit", cs);
  cs.clear();
  for (const auto& [ijk, c] : t.mult.a)
    cs.emplace_back("mu[" + std::to_string(ijk[0]) + "," + std::to_string(ijk[1]) + "," +
                        std::to_string(ijk[2]) + "]",
                    c);
  rep.mult = positivity_of("mult", cs);
  cs.clear();
  for (const auto& [ijk, c] : t.comult.a)
    cs.emplace_back("Delta[" + std::to_string(ijk[0]) + "," + std::to_string(ijk[1]) + "," +
                        std::to_string(ijk[2]) + "]",
                    c);
  rep.comult = positivity_of("comult", cs);
  if (t.antipode) {
    cs.clear();
    for (const auto& [ij, c] : t.antipode->a)
      cs.emplace_back("S[" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "]", c);
    rep.antipode = positivity_of("antipode", cs);
  } else {
    rep.antipode.name = "antipode";
    rep.antipode.verdict = positivity::absent;
  }
  rep.nearly_positive = rep.unit.verdict == positivity::positive &&
                        rep.counit.verdict == positivity::positive &&
                        rep.mult.verdict == positivity::positive &&
                        rep.comult.verdict == positivity::positive;
  rep.positive = rep.nearly_positive && rep.antipode.verdict == positivity::positive;
  return rep;
}

FinHopf dual_hopf(const FinHopf& h) {
  FinHopf r;
  r.d = h.d;
  r.m = h.m;
  r.unit = h.counit;
  r.counit = h.unit;
  r.mult = Tensor3(h.d, h.m);
  for (const auto& [ijk, c] : h.comult.a) r.mult.a[{ijk[1], ijk[2], ijk[0]}] = c;
  r.comult = Tensor3(h.d, h.m);
  for (const auto& [ijk, c] : h.mult.a) r.comult.a[{ijk[2], ijk[0], ijk[1]}] = c;
  if (h.antipode) r.antipode = h.antipode->transposed();
  return r;
}

HopfFlags hopf_flags(const FinHopf& h) {
  HopfFlags f;
  f.commutative = true;
  f.cocommutative = true;
  for (const auto& [ijk, c] : h.mult.a)
    if (h.mult.get(ijk[1], ijk[0], ijk[2]) != c) {
      f.commutative = false;
      break;
    }
  for (const auto& [ijk, c] : h.comult.a)
    if (h.comult.get(ijk[0], ijk[2], ijk[1]) != c) {
      f.cocommutative = false;
      break;
    }
  return f;
}

GrouplikeResult grouplikes_from_coalgebra_basis(const FinHopf& h, const Mat& basis) {
  FinHopf t = change_basis(h, basis);
  int d = t.d;
  // Delta(b) must be eps(b)^{-1} b (x) b for every b.
  for (int i = 0; i < d; ++i) {
    std::vector<std::array<int, 3>> nz;
    for (const auto& [ijk, c] : t.comult.a)
      if (ijk[0] == i) nz.push_back(ijk);
    if (nz.size() != 1)
      fail(errc::not_a_coalgebra_basis,
           "Delta(b) is not a scalar multiple of a pure basis tensor",
           "b = basis[" + std::to_string(i) + "], " + std::to_string(nz.size()) + " terms");
    if (nz[0][1] != i || nz[0][2] != i)
      fail(errc::not_a_coalgebra_basis, "Delta(b) is not supported on b (x) b",
           "b = basis[" + std::to_string(i) + "]");
    if (t.counit[i].is_zero())
      fail(errc::counit_zero, "coalgebra basis vector with eps(b) = 0",
           "b = basis[" + std::to_string(i) + "]");
    if (t.comult.a.at(nz[0]) != t.counit[i].inverse())
      fail(errc::not_a_coalgebra_basis, "Delta(b) coefficient is not eps(b)^{-1}",
           "b = basis[" + std::to_string(i) + "]");
  }
  // g_i := eps(b_i)^{-1} b_i; products must land exactly on the g_k.
  std::vector<int> table(static_cast<size_t>(d) * static_cast<size_t>(d), -1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // b_i b_j = (eps_i eps_j / eps_k) b_k for exactly one k
      std::vector<std::array<int, 3>> nz;
      for (const auto& [ijk, c] : t.mult.a)
        if (ijk[0] == i && ijk[1] == j) nz.push_back(ijk);
      if (nz.size() != 1)
        fail(errc::not_a_coalgebra_basis, "group-like product is not a single basis term",
             idx2(i, j));
      int k = nz[0][2];
      Cyc expected = t.counit[i] * t.counit[j] / t.counit[k];
      if (t.mult.a.at(nz[0]) != expected)
        fail(errc::not_a_coalgebra_basis, "group-like product has wrong scalar", idx2(i, j));
      table[static_cast<size_t>(i * d + j)] = k;
    }
  FiniteGroup g(d, table);  // validates the axioms
  // Rescaled basis columns eps(b_i)^{-1} * basis col i; h in that basis must
  // have exactly the group-algebra structure constants.
  Mat q = basis.m == h.m ? basis : basis.lifted(h.m);
  Mat resc(d, d, h.m);
  for (const auto& [ij, v] : q.a) resc.a[ij] = v * t.counit[ij.second].inverse();
  FinHopf gb = change_basis(h, resc);
  FinHopf expect = group_algebra(g);
  if (h.m != 1) expect = expect.lifted(h.m);
  if (!(gb.mult == expect.mult) || !(gb.comult == expect.comult) || !(gb.unit == expect.unit) ||
      !(gb.counit == expect.counit))
    fail(errc::not_a_coalgebra_basis,
         "rescaled basis does not carry the group-algebra structure constants");
  std::vector<int> order(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) order[static_cast<size_t>(i)] = i;
  return GrouplikeResult{std::move(g), std::move(resc), std::move(order)};
}

GrouplikeResult unit_in_basis_consequence(const FinHopf& h, const Mat& basis) {
  Mat pm = basis.m == h.m ? basis : basis.lifted(h.m);
  bool found = false;
  for (int j = 0; j < h.d && !found; ++j) found = pm.col(j) == h.unit;
  if (!found) fail(errc::unit_not_in_basis, "the unit is not a candidate basis vector");
  auto r = is_phi_set_theoretic(h, basis);
  if (std::holds_alternative<PhiBasisFailure>(r)) {
    const auto& f = std::get<PhiBasisFailure>(r);
    fail(errc::bad_input, "basis is not Phi-set theoretic", idx2(f.b, f.c));
  }
  return grouplikes_from_coalgebra_basis(h, basis);
}

FinHopf tensor_hopf(const FinHopf& a0, const FinHopf& b0) {
  long m = std::lcm(a0.m, b0.m);
  FinHopf a = a0.m == m ? a0 : a0.lifted(m);
  FinHopf b = b0.m == m ? b0 : b0.lifted(m);
  int da = a.d, db = b.d, d = da * db;
  auto idx = [&](int i, int j) { return i * db + j; };
  FinHopf r;
  r.d = d;
  r.m = m;
  r.unit = Vec(d, m);
  r.counit = Vec(d, m);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      r.unit[idx(i, j)] = a.unit[i] * b.unit[j];
      r.counit[idx(i, j)] = a.counit[i] * b.counit[j];
    }
  r.mult = Tensor3(d, m);
  for (const auto& [x, cx] : a.mult.a)
    for (const auto& [y, cy] : b.mult.a)
      r.mult.a[{idx(x[0], y[0]), idx(x[1], y[1]), idx(x[2], y[2])}] = cx * cy;
  r.comult = Tensor3(d, m);
  for (const auto& [x, cx] : a.comult.a)
    for (const auto& [y, cy] : b.comult.a)
      r.comult.a[{idx(x[0], y[0]), idx(x[1], y[1]), idx(x[2], y[2])}] = cx * cy;
  if (a.antipode && b.antipode) r.antipode = kron(*a.antipode, *b.antipode);
  return r;
}

FinHopf group_algebra(const FiniteGroup& g) {
  int n = g.order();
  FinHopf h;
  h.d = n;
  h.m = 1;
  h.unit = Vec(n, 1);
  h.unit[g.identity()] = Cyc::one(1);
  h.counit = Vec(n, 1);
  for (int i = 0; i < n; ++i) h.counit[i] = Cyc::one(1);
  h.mult = Tensor3(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.mult.a[{i, j, g.mul(i, j)}] = Cyc::one(1);
  h.comult = Tensor3(n, 1);
  for (int i = 0; i < n; ++i) h.comult.a[{i, i, i}] = Cyc::one(1);
  Mat s(n, n, 1);
  for (int j = 0; j < n; ++j) s.a[{g.inverse(j), j}] = Cyc::one(1);
  h.antipode = std::move(s);
  return h;
}

FinHopf dual_group_algebra(const FiniteGroup& g) { return dual_hopf(group_algebra(g)); }

FinHopf trivial_hopf() { return group_algebra(FiniteGroup::trivial()); }

std::optional<Mat> solve_antipode(const FinHopf& h) {
  int d = h.d;
  long m = h.m;
  // m(S (x) id)Delta = eta eps, linear in the d^2 unknowns S[r][j]:
  //   sum_{j,k} Delta_i^{jk} S[r][j] mult_{rk}^c = eps_i unit_c
  int unknowns = d * d;  // unknown index r*d + j
  std::vector<Vec> cols(static_cast<size_t>(unknowns), Vec(d * d, m));
  for (const auto& [ijk, c] : h.comult.a) {
    int i = ijk[0], j = ijk[1], k = ijk[2];
    for (const auto& [rkc, c2] : h.mult.a) {
      if (rkc[1] != k) continue;
      int r = rkc[0], cc = rkc[2];
      cols[static_cast<size_t>(r * d + j)][i * d + cc] += c * c2;
    }
  }
  Vec target(d * d, m);
  for (int i = 0; i < d; ++i)
    for (int c = 0; c < d; ++c) target[i * d + c] = h.counit[i] * h.unit[c];
  auto sol = solve_in_span(cols, target);
  if (!sol) return std::nullopt;
  Mat s(d, d, m);
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j) s.set(r, j, (*sol)[r * d + j]);
  // validate the right-hand axiom too
  FinHopf t = h;
  t.antipode = s;
  if (!verify_hopf(t).all_ok()) return std::nullopt;
  return s;
}

AxiomReport right_monomial_check(const FinHopf& h, const Mat& basis) {
  AxiomReport rep;
  auto add = [&](std::string name, bool ok, std::string witness = {}) {
    rep.items.push_back({std::move(name), ok, std::move(witness)});
  };
  auto restricted = is_phi_set_theoretic(h, basis);
  if (std::holds_alternative<PhiBasisFailure>(restricted)) {
    add("phi-set theoretic", false, "basis fails the pure-tensor requirement");
    return rep;
  }
  const FiniteSolution& sol = std::get<FiniteSolution>(restricted);
  FinHopf t = change_basis(h, basis);
  int d = t.d;
  long m = t.m;
  std::vector<Vec> e;
  for (int i = 0; i < d; ++i) e.push_back(basis_vec(d, m, i));
  bool i_ok = true, ii_ok = true, iv_ok = true;
  std::string i_w, ii_w, iv_w;
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) {
      auto [psi, circ] = sol.apply(b, c);
      std::string at = idx2(b, c);
      if (i_ok && !(apply_mult(t, e[static_cast<size_t>(b)], e[static_cast<size_t>(c)]) ==
                    t.counit[psi] * e[static_cast<size_t>(circ)])) {
        i_ok = false;
        i_w = at;
      }
      if (ii_ok && !(t.counit[c] * e[static_cast<size_t>(b)] ==
                     t.counit[circ] * e[static_cast<size_t>(psi)])) {
        ii_ok = false;
        ii_w = at;
      }
      if (t.antipode && iv_ok) {
        Vec s_psi = *t.antipode * e[static_cast<size_t>(psi)];
        if (!(apply_mult(t, s_psi, e[static_cast<size_t>(circ)]) ==
              t.counit[b] * e[static_cast<size_t>(c)])) {
          iv_ok = false;
          iv_w = at + " first form";
        }
        Vec s_b = *t.antipode * e[static_cast<size_t>(b)];
        if (iv_ok && !(t.counit[c] * apply_mult(t, s_b, e[static_cast<size_t>(circ)]) ==
                       t.counit[circ] * t.counit[b] * e[static_cast<size_t>(c)])) {
          iv_ok = false;
          iv_w = at + " second form";
        }
      }
    }
  add("(i) bc = eps(psi_c(b)) (c o b)", i_ok, i_w);
  add("(ii) eps(c) b = eps(c o b) psi_c(b)", ii_ok, ii_w);
  bool iii_ok = true, iii_eps_ok = true;
  std::string iii_w, iii_eps_w;
  for (int b = 0; b < d; ++b) {
    Vec lhs = apply_comult(t, e[static_cast<size_t>(b)]);
    Vec rhs(d * d, m);
    bool eps_defined = true;
    Vec rhs_eps(d * d, m);
    for (int c = 0; c < d; ++c) {
      const Cyc& lam = t.unit[c];
      if (lam.is_zero()) continue;
      auto [psi, circ] = sol.apply(b, c);
      rhs[psi * d + circ] += lam;
      if (t.counit[circ].is_zero())
        eps_defined = false;
      else
        rhs_eps[b * d + circ] += lam * t.counit[c] / t.counit[circ];
    }
    if (iii_ok && !(lhs == rhs)) {
      iii_ok = false;
      iii_w = "b" + std::to_string(b);
    }
    if (eps_defined && iii_eps_ok && !(lhs == rhs_eps)) {
      iii_eps_ok = false;
      iii_eps_w = "b" + std::to_string(b);
    }
  }
  add("(iii) Delta(b) = sum lambda_c psi_c(b) (x) (c o b)", iii_ok, iii_w);
  add("(iii') eps-rewritten coproduct where defined", iii_eps_ok, iii_eps_w);
  if (t.antipode) add("(iv) antipode identities", iv_ok, iv_w);
  return rep;
}

}  // namespace pentagon
