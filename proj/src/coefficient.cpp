#include "pentagon/coefficient.hpp"

#include <algorithm>
#include <set>

namespace pentagon {

Vec elementary_endo(int n, int r, int c) {
  Vec v(n * n, 1);
  v[r * n + c] = Cyc::one(1);
  return v;
}

Vec endo_identity(int n) {
  Vec v(n * n, 1);
  for (int i = 0; i < n; ++i) v[i * n + i] = Cyc::one(1);
  return v;
}

Vec endo_mul(int n, const Vec& a, const Vec& b) {
  Vec r(n * n, a.m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Cyc& x = a[i * n + k];
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Cyc& y = b[k * n + j];
        if (!y.is_zero()) r[i * n + j] += x * y;
      }
    }
  return r;
}

EltAA algebra_solution_element(const FiniteSolution& s) {
  int n = s.size();
  EltAA r;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = s.apply(x, y);
      // S_{psi_y(x), x} (x) S_{y o x, y}
      auto key = std::make_pair(a * n + x, b * n + y);
      Cyc& dst = r.try_emplace(key, Cyc::zero(1)).first->second;
      dst += Cyc::one(1);
    }
  return r;
}

EltAA algebra_solution_inverse(const FiniteSolution& s) {
  return algebra_solution_element(invert(s));
}

EltAA mul_aa(int n, const EltAA& x, const EltAA& y) {
  EltAA r;
  for (const auto& [kx, vx] : x) {
    int p = kx.first / n, q = kx.first % n;
    int a = kx.second / n, b = kx.second % n;
    for (const auto& [ky, vy] : y) {
      // (S_{p,q} (x) S_{a,b}) (S_{p',q'} (x) S_{a',b'})
      int p2 = ky.first / n, q2 = ky.first % n;
      int a2 = ky.second / n, b2 = ky.second % n;
      if (q != p2 || b != a2) continue;
      auto key = std::make_pair(p * n + q2, a * n + b2);
      Cyc& dst = r.try_emplace(key, Cyc::zero(1)).first->second;
      dst += vx * vy;
    }
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

EltAA tensor_aa(int n, const Vec& a, const Vec& b) {
  EltAA r;
  for (int i = 0; i < n * n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n * n; ++j)
      if (!b[j].is_zero()) r[{i, j}] = a[i] * b[j];
  }
  return r;
}

int CoefficientBasis::index_of(int x_prime, int y_prime) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == std::make_pair(x_prime, y_prime)) return static_cast<int>(i);
  fail(errc::structure_violation, "label not in coefficient basis",
       "(" + std::to_string(x_prime) + "," + std::to_string(y_prime) + ")");
}

SpanningSets spanning_sets(const FiniteSolution& s) {
  std::pair<std::pair<int, int>, std::pair<int, int>> w;
  if (!s.is_bijective(&w)) fail(errc::not_bijective, "spanning_sets needs a bijective solution");
  if (!verify_equation(s, eq_tag::rpe)) fail(errc::not_rpe, "spanning_sets needs an RPE solution");
  int n = s.size();
  SpanningSets out;
  out.left.assign(static_cast<size_t>(n) * static_cast<size_t>(n), Vec(n * n, 1));
  out.right.assign(static_cast<size_t>(n) * static_cast<size_t>(n), Vec(n * n, 1));
  for (int xp = 0; xp < n; ++xp)
    for (int yp = 0; yp < n; ++yp) {
      // right: (delta_{S_{psi_{y'}(x'), x'}} (x) id)(s^A)
      Vec right(n * n, 1);
      for (int y = 0; y < n; ++y)
        if (s.psi(y, xp) == s.psi(yp, xp)) right[s.circ(y, xp) * n + y] += Cyc::one(1);
      // left: (id (x) delta_{S_{y' o x', y'}})(s^A)
      Vec left(n * n, 1);
      for (int x = 0; x < n; ++x)
        if (s.circ(yp, x) == s.circ(yp, xp)) left[s.psi(yp, x) * n + x] += Cyc::one(1);
      out.right[static_cast<size_t>(xp * n + yp)] = std::move(right);
      out.left[static_cast<size_t>(xp * n + yp)] = std::move(left);
    }
  return out;
}

namespace {

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return q;
}

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  // (p o q)(i) = p(q(i))
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
  return r;
}

struct BasisBuilder {
  const LeftGroupAnalysis& g;
  int n;
  CoefficientBasis basis;

  BasisBuilder(const LeftGroupAnalysis& lga, CoefficientBasis::side_t side) : g(lga), n(lga.n) {
    basis.side = side;
    for (int yp : g.retract_reps)
      for (int xp : g.group_part) {
        basis.labels.emplace_back(xp, yp);
        basis.vectors.push_back(side == CoefficientBasis::side_t::right ? right_vec(xp, yp)
                                                                        : left_vec(xp, yp));
      }
  }

  Vec right_vec(int xp, int yp) const {
    Vec v(n * n, 1);
    for (int y : g.nu(yp)) v[g.circ(y, xp) * n + y] = Cyc::one(1);
    return v;
  }

  Vec left_vec(int xp, int yp) const {
    Vec v(n * n, 1);
    for (int x : g.mu(xp)) v[g.psi[static_cast<size_t>(yp)][static_cast<size_t>(x)] * n + x] = Cyc::one(1);
    return v;
  }
};

// Distinct canonical basis elements have disjoint supports, so expansion in
// the basis is a support lookup plus an exact reconstruction check.
std::optional<Vec> express_in_disjoint_basis(const std::vector<Vec>& basis, const Vec& x) {
  Vec coeffs(static_cast<int>(basis.size()), x.m);
  Vec rebuilt(x.dim, x.m);
  for (size_t b = 0; b < basis.size(); ++b) {
    int pos = -1;
    for (int i = 0; i < x.dim; ++i)
      if (!basis[b][i].is_zero()) {
        pos = i;
        break;
      }
    if (pos < 0) continue;
    Cyc c = x[pos] / basis[b][pos];
    coeffs[static_cast<int>(b)] = c;
    if (!c.is_zero()) rebuilt = rebuilt + c * basis[b];
  }
  if (!(rebuilt == x)) return std::nullopt;
  return coeffs;
}

}  // namespace

FiniteSolution canonical_phi_table(const LeftGroupAnalysis& g, const CoefficientBasis& basis) {
  int d = static_cast<int>(basis.labels.size());
  std::vector<std::pair<int, int>> table(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto [x1, y1] = basis.labels[static_cast<size_t>(i)];
    for (int j = 0; j < d; ++j) {
      auto [x2, y2] = basis.labels[static_cast<size_t>(j)];
      int b = g.circ(y2, x2);
      // left output: ( pi_G(psi_b(x1)), rep(psi_{y1} o psi_b^{-1}) )
      int lx = g.pi_G(g.psi[static_cast<size_t>(b)][static_cast<size_t>(x1)]);
      std::vector<int> comp = compose_perm(g.psi[static_cast<size_t>(y1)],
                                           inverse_perm(g.psi[static_cast<size_t>(b)]));
      int ly = g.rep_of_psi_table(comp);
      // right output: ( x2 o x1, y2 )
      int rx = g.circ(x2, x1);
      table[static_cast<size_t>(i * d + j)] = {basis.index_of(lx, ly), basis.index_of(rx, y2)};
    }
  }
  return FiniteSolution(d, std::move(table), eq_tag::rpe);
}

FinHopf closed_form_Hr(const LeftGroupAnalysis& g, const CoefficientBasis& basis) {
  if (basis.side != CoefficientBasis::side_t::right)
    fail(errc::bad_input, "closed forms are stated for the right coefficient algebra");
  int d = static_cast<int>(basis.labels.size());
  int n = g.n;
  std::vector<int> id(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
  FinHopf h;
  h.d = d;
  h.m = 1;
  // 1 = sum over Ebar of g_{(1_G, y')}
  h.unit = Vec(d, 1);
  h.counit = Vec(d, 1);
  for (int i = 0; i < d; ++i) {
    auto [xp, yp] = basis.labels[static_cast<size_t>(i)];
    if (xp == g.unit) h.unit[i] = Cyc::one(1);
    if (g.psi[static_cast<size_t>(yp)] == id) h.counit[i] = Cyc::one(1);
  }
  // g_{(x',y')} g_{(u',z')} = [psi_{z' o u'} = psi_{y'}] g_{(u' o x', z')}
  h.mult = Tensor3(d, 1);
  for (int i = 0; i < d; ++i) {
    auto [xp, yp] = basis.labels[static_cast<size_t>(i)];
    for (int j = 0; j < d; ++j) {
      auto [up, zp] = basis.labels[static_cast<size_t>(j)];
      if (g.psi[static_cast<size_t>(g.circ(zp, up))] != g.psi[static_cast<size_t>(yp)]) continue;
      h.mult.a[{i, j, basis.index_of(g.circ(up, xp), zp)}] = Cyc::one(1);
    }
  }
  // Delta(g_{(x',y')}) = sum over d' in Ebar of
  //   g_{(pi_G(psi_{d'}(x')), rep(psi_{y'} psi_{d'}^{-1}))} (x) g_{(x', d')}
  h.comult = Tensor3(d, 1);
  for (int i = 0; i < d; ++i) {
    auto [xp, yp] = basis.labels[static_cast<size_t>(i)];
    for (int dp : g.retract_reps) {
      int lx = g.pi_G(g.psi[static_cast<size_t>(dp)][static_cast<size_t>(xp)]);
      std::vector<int> comp = compose_perm(g.psi[static_cast<size_t>(yp)],
                                           inverse_perm(g.psi[static_cast<size_t>(dp)]));
      int a = basis.index_of(lx, g.rep_of_psi_table(comp));
      h.comult.a[{i, a, basis.index_of(xp, dp)}] = Cyc::one(1);
    }
  }
  // S(g_{(x',y')}) = g_{(inv_G(psi_{y'}(x')), rep(psi_{y' o x'}^{-1}))}
  Mat antipode(d, d, 1);
  for (int i = 0; i < d; ++i) {
    auto [xp, yp] = basis.labels[static_cast<size_t>(i)];
    int col_x = g.inv_G(g.psi[static_cast<size_t>(yp)][static_cast<size_t>(xp)]);
    std::vector<int> inv = inverse_perm(g.psi[static_cast<size_t>(g.circ(yp, xp))]);
    antipode.set(basis.index_of(col_x, g.rep_of_psi_table(inv)), i, Cyc::one(1));
  }
  h.antipode = std::move(antipode);
  return h;
}

namespace {

CoefficientAlgebra build_side(const FiniteSolution& s, CoefficientBasis::side_t side) {
  LeftGroupAnalysis g = left_group_analysis(s);
  int n = s.size();
  BasisBuilder bb(g, side);
  int d = static_cast<int>(bb.basis.vectors.size());
  if (rank(bb.basis.vectors) != d)
    fail(errc::structure_violation, "canonical basis is not linearly independent");

  FinHopf h;
  h.d = d;
  h.m = 1;

  // multiplication and unit by expressing End(k[S]) products in the basis
  h.mult = Tensor3(d, 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec p = endo_mul(n, bb.basis.vectors[static_cast<size_t>(i)],
                       bb.basis.vectors[static_cast<size_t>(j)]);
      auto c = solve_in_span(bb.basis.vectors, p);
      if (!c)
        fail(errc::structure_violation, "basis product left the span",
             "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      for (int k = 0; k < d; ++k)
        if (!(*c)[k].is_zero()) h.mult.a[{i, j, k}] = (*c)[k];
    }
  {
    auto c = solve_in_span(bb.basis.vectors, endo_identity(n));
    if (!c) fail(errc::structure_violation, "identity not in coefficient algebra");
    h.unit = *c;
  }

  // counit from the defining functionals
  h.counit = Vec(d, 1);
  for (int i = 0; i < d; ++i) {
    auto [xp, yp] = bb.basis.labels[static_cast<size_t>(i)];
    bool one = side == CoefficientBasis::side_t::right
                   ? s.psi(yp, xp) == xp   // delta_{S_{psi_{y'}(x'), x'}}(1)
                   : s.circ(yp, xp) == yp; // delta_{S_{y' o x', y'}}(1)
    if (one) h.counit[i] = Cyc::one(1);
  }

  // comultiplication by conjugation: R(x (x) 1)R^{-1}, resp. R^{-1}(1 (x) x)R
  EltAA r = algebra_solution_element(s);
  EltAA rinv = algebra_solution_inverse(s);
  Vec id_a = endo_identity(n);
  h.comult = Tensor3(d, 1);
  std::vector<EltAA> tensor_basis;  // g_a (x) g_b in row-major (a, b)
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      tensor_basis.push_back(tensor_aa(n, bb.basis.vectors[static_cast<size_t>(a)],
                                       bb.basis.vectors[static_cast<size_t>(b)]));
  for (int i = 0; i < d; ++i) {
    EltAA lifted = side == CoefficientBasis::side_t::right
                       ? tensor_aa(n, bb.basis.vectors[static_cast<size_t>(i)], id_a)
                       : tensor_aa(n, id_a, bb.basis.vectors[static_cast<size_t>(i)]);
    EltAA conj = side == CoefficientBasis::side_t::right
                     ? mul_aa(n, mul_aa(n, r, lifted), rinv)
                     : mul_aa(n, mul_aa(n, rinv, lifted), r);
    // disjoint supports: coefficient at (a, b) is the value at any support
    // key of g_a (x) g_b
    EltAA rebuilt;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const EltAA& tb = tensor_basis[static_cast<size_t>(a * d + b)];
        auto it0 = tb.begin();
        auto found = conj.find(it0->first);
        if (found == conj.end()) continue;
        Cyc c = found->second / it0->second;
        if (c.is_zero()) continue;
        h.comult.a[{i, a, b}] = c;
        for (const auto& [k, v] : tb) {
          Cyc& dst = rebuilt.try_emplace(k, Cyc::zero(1)).first->second;
          dst += c * v;
        }
      }
    for (auto it = rebuilt.begin(); it != rebuilt.end();)
      it = it->second.is_zero() ? rebuilt.erase(it) : std::next(it);
    if (!(rebuilt == conj))
      fail(errc::structure_violation, "conjugation coproduct left the basis span",
           "basis element " + std::to_string(i));
  }

  // antipode from the defining slice of R^{-1}
  FiniteSolution si = invert(s);
  Mat antipode(d, d, 1);
  for (int i = 0; i < d; ++i) {
    auto [xp, yp] = bb.basis.labels[static_cast<size_t>(i)];
    Vec img(n * n, 1);
    if (side == CoefficientBasis::side_t::right) {
      // sum over y with x' y = psi_{y'}(x') of S_{theta_{x'}(y), y}
      for (int y = 0; y < n; ++y) {
        auto [prod, theta] = si.apply(xp, y);
        if (prod == s.psi(yp, xp)) img[theta * n + y] += Cyc::one(1);
      }
    } else {
      // sum over x with theta_x(y') = y' o x' of S_{x y', x}
      for (int x = 0; x < n; ++x) {
        auto [prod, theta] = si.apply(x, yp);
        if (theta == s.circ(yp, xp)) img[prod * n + x] += Cyc::one(1);
      }
    }
    auto c = express_in_disjoint_basis(bb.basis.vectors, img);
    if (!c) fail(errc::structure_violation, "antipode image left the span",
                 "basis element " + std::to_string(i));
    for (int k = 0; k < d; ++k) antipode.set(k, i, (*c)[k]);
  }
  h.antipode = std::move(antipode);

  AxiomReport rep = verify_hopf(h);
  if (!rep.all_ok())
    fail(errc::structure_violation,
         "coefficient algebra failed a Hopf axiom: " + rep.first_failure());
  return CoefficientAlgebra{std::move(h), std::move(bb.basis), std::move(g)};
}

}  // namespace

CoefficientAlgebra build_Hr(const FiniteSolution& s) {
  return build_side(s, CoefficientBasis::side_t::right);
}

CoefficientAlgebra build_Hl(const FiniteSolution& s) {
  return build_side(s, CoefficientBasis::side_t::left);
}

Coinvariants coinvariants(const FiniteSolution& s) {
  LeftGroupAnalysis g = left_group_analysis(s);
  int n = s.size();
  Coinvariants out;
  std::set<std::vector<int>> seen_columns;  // d o S as a set, per d
  for (int e : g.idempotents) {
    if (!(g.psi[static_cast<size_t>(e)] ==
          g.psi[static_cast<size_t>(g.unit)]))
      continue;  // d in nu_psi(1) cap E
    std::set<int> dS;
    for (int z = 0; z < n; ++z) dS.insert(g.circ(e, z));
    std::vector<int> cols(dS.begin(), dS.end());
    if (!seen_columns.insert(cols).second) continue;
    for (int x = 0; x < n; ++x) {
      Vec v(n * n, 1);
      for (int l : cols) v[x * n + l] = Cyc::one(1);
      out.spanning.push_back(std::move(v));
    }
  }
  out.dim = rank(out.spanning);
  int bound = n * static_cast<int>(g.idempotents.size()) /
              static_cast<int>(g.retract_reps.size());
  if (out.dim > bound)
    fail(errc::structure_violation, "coinvariants exceed the dimension bound");
  return out;
}

bool comult_crosscheck(const FiniteSolution& s) {
  CoefficientAlgebra ca = build_Hr(s);
  const LeftGroupAnalysis& g = ca.analysis;
  int n = s.size();
  int d = ca.hopf.d;
  EltAA r = algebra_solution_element(s);
  EltAA rinv = algebra_solution_inverse(s);
  Vec id_a = endo_identity(n);
  for (int i = 0; i < d; ++i) {
    auto [xp, yp] = ca.basis.labels[static_cast<size_t>(i)];
    EltAA conj = mul_aa(n, mul_aa(n, r, tensor_aa(n, ca.basis.vectors[static_cast<size_t>(i)], id_a)), rinv);
    // closed form: sum over d' in Ebar of
    //   g_{(pi_G(psi_{d'}(x')), rep(psi_{y'} psi_{d'}^{-1}))} (x) g_{(x', d')}
    EltAA closed;
    for (int dp : g.retract_reps) {
      int lx = g.pi_G(g.psi[static_cast<size_t>(dp)][static_cast<size_t>(xp)]);
      std::vector<int> comp = compose_perm(g.psi[static_cast<size_t>(yp)],
                                           inverse_perm(g.psi[static_cast<size_t>(dp)]));
      int ly = g.rep_of_psi_table(comp);
      int a = ca.basis.index_of(lx, ly);
      int b = ca.basis.index_of(xp, dp);
      EltAA term = tensor_aa(n, ca.basis.vectors[static_cast<size_t>(a)],
                             ca.basis.vectors[static_cast<size_t>(b)]);
      for (const auto& [k, v] : term) {
        Cyc& dst = closed.try_emplace(k, Cyc::zero(1)).first->second;
        dst += v;
      }
    }
    for (auto it = closed.begin(); it != closed.end();)
      it = it->second.is_zero() ? closed.erase(it) : std::next(it);
    if (!(closed == conj)) return false;
  }
  return true;
}

ReconstructionReport reconstruction_identity(const FiniteSolution& s) {
  ReconstructionReport rep;
  CoefficientAlgebra ca = build_Hr(s);
  int n = s.size();
  rep.dim_V = n;
  rep.dim_Hr = ca.hopf.d;
  // V_H = { x : s^v(x (x) e_y) = x (x) e_y for all y }
  std::vector<Vec> equations;
  for (int y = 0; y < n; ++y)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        Vec eq(n, 1);
        bool nonzero = false;
        for (int a = 0; a < n; ++a)
          if (s.apply(a, y) == std::make_pair(p, q)) {
            eq[a] += Cyc::one(1);
            nonzero = true;
          }
        if (q == y) {
          eq[p] -= Cyc::one(1);
          nonzero = true;
        }
        if (nonzero && !eq.is_zero()) equations.push_back(std::move(eq));
      }
  rep.dim_VH = static_cast<int>(kernel_basis(equations, n, 1).size());
  rep.dimension_identity = rep.dim_V == rep.dim_Hr * rep.dim_VH;
  if (n <= 4 && rep.dim_Hr > 0 && n % rep.dim_Hr == 0) {
    rep.product_attempted = true;
    int w = n / rep.dim_Hr;
    auto induced = is_phi_set_theoretic(ca.hopf, Mat::identity(ca.hopf.d, 1));
    if (std::holds_alternative<FiniteSolution>(induced)) {
      FiniteSolution phi_r = std::get<FiniteSolution>(induced);
      FiniteSolution idw = FiniteSolution::identity(w);
      idw.set_tag(eq_tag::rpe);
      FiniteSolution candidate = product(phi_r, idw);
      FiniteSolution s_rpe = s;
      s_rpe.set_tag(eq_tag::rpe);
      rep.product_equivalent = equivalence(s_rpe, candidate).has_value();
    }
  }
  return rep;
}

}  // namespace pentagon
