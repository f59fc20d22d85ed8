#include "pentagon/set_solution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace pentagon {

const char* eq_tag_name(eq_tag t) {
  switch (t) {
    case eq_tag::rpe: return "rpe";
    case eq_tag::pe: return "pe";
    case eq_tag::none: return "none";
  }
  return "none";
}

eq_tag eq_tag_from_name(const std::string& name) {
  if (name == "rpe" || name == "RPE") return eq_tag::rpe;
  if (name == "pe" || name == "PE") return eq_tag::pe;
  if (name == "none") return eq_tag::none;
  fail(errc::bad_input, "unknown equation tag: " + name);
}

FiniteSolution::FiniteSolution(int n, std::vector<std::pair<int, int>> table, eq_tag tag)
    : n_(n), t_(std::move(table)), tag_(tag) {
  if (n <= 0 || t_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    fail(errc::bad_input, "FiniteSolution: table must cover all n^2 pairs");
  for (const auto& [a, b] : t_)
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(errc::bad_input, "FiniteSolution: image out of range");
}

FiniteSolution FiniteSolution::identity(int n) {
  std::vector<std::pair<int, int>> t;
  t.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.emplace_back(x, y);
  return FiniteSolution(n, std::move(t), eq_tag::none);
}

bool FiniteSolution::is_bijective(
    std::pair<std::pair<int, int>, std::pair<int, int>>* witness) const {
  std::vector<int> seen(static_cast<size_t>(n_) * static_cast<size_t>(n_), -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      auto [a, b] = apply(x, y);
      int& slot = seen[static_cast<size_t>(a * n_ + b)];
      if (slot >= 0) {
        if (witness) *witness = {{slot / n_, slot % n_}, {x, y}};
        return false;
      }
      slot = x * n_ + y;
    }
  return true;
}

namespace {

struct Triple {
  int x, y, z;
};

using TripleMap = std::function<Triple(Triple)>;

TripleMap lift12(const FiniteSolution& s) {
  return [&s](Triple t) {
    auto [a, b] = s.apply(t.x, t.y);
    return Triple{a, b, t.z};
  };
}
TripleMap lift23(const FiniteSolution& s) {
  return [&s](Triple t) {
    auto [a, b] = s.apply(t.y, t.z);
    return Triple{t.x, a, b};
  };
}
TripleMap lift13(const FiniteSolution& s) {
  return [&s](Triple t) {
    auto [a, b] = s.apply(t.x, t.z);
    return Triple{a, t.y, b};
  };
}

bool triples_agree(int n, const std::vector<TripleMap>& lhs, const std::vector<TripleMap>& rhs) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple l{x, y, z}, r{x, y, z};
        // composition is right-to-left: apply the last listed map first
        for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) l = (*it)(l);
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) r = (*it)(r);
        if (l.x != r.x || l.y != r.y || l.z != r.z) return false;
      }
  return true;
}

}  // namespace

bool verify_equation(const FiniteSolution& s, eq_tag eq) {
  auto s12 = lift12(s), s13 = lift13(s), s23 = lift23(s);
  if (eq == eq_tag::rpe)  // Z12 Z13 Z23 = Z23 Z12
    return triples_agree(s.size(), {s12, s13, s23}, {s23, s12});
  if (eq == eq_tag::pe)  // Z23 Z13 Z12 = Z12 Z23
    return triples_agree(s.size(), {s23, s13, s12}, {s12, s23});
  fail(errc::bad_input, "verify_equation: tag must be rpe or pe");
}

FiniteSolution invert(const FiniteSolution& s) {
  std::pair<std::pair<int, int>, std::pair<int, int>> w;
  if (!s.is_bijective(&w))
    fail(errc::not_bijective,
         "solution is not bijective",
         "(" + std::to_string(w.first.first) + "," + std::to_string(w.first.second) + ") and (" +
             std::to_string(w.second.first) + "," + std::to_string(w.second.second) +
             ") share an image");
  int n = s.size();
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = s.apply(x, y);
      t[static_cast<size_t>(a * n + b)] = {x, y};
    }
  return FiniteSolution(n, std::move(t), s.tag());
}

FiniteSolution dual(const FiniteSolution& s) {
  FiniteSolution si = invert(s);
  int n = s.size();
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = si.apply(y, x);
      t[static_cast<size_t>(x * n + y)] = {b, a};
    }
  return FiniteSolution(n, std::move(t), s.tag());
}

SolutionFlags check_flags(const FiniteSolution& s) {
  auto s12 = lift12(s), s13 = lift13(s), s23 = lift23(s);
  SolutionFlags f;
  f.commutative = triples_agree(s.size(), {s13, s23}, {s23, s13});
  f.cocommutative = triples_agree(s.size(), {s12, s13}, {s13, s12});
  return f;
}

FiniteSolution product(const FiniteSolution& a, const FiniteSolution& b) {
  if (a.tag() != b.tag()) fail(errc::tag_mismatch, "product: factors carry different equations");
  int n1 = a.size(), n2 = b.size(), n = n1 * n2;
  auto idx = [&](int u, int v) { return u * n2 + v; };
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2)
      for (int y1 = 0; y1 < n1; ++y1)
        for (int y2 = 0; y2 < n2; ++y2) {
          auto [a1, b1] = a.apply(x1, y1);
          auto [a2, b2] = b.apply(x2, y2);
          t[static_cast<size_t>(idx(x1, x2) * n + idx(y1, y2))] = {idx(a1, a2), idx(b1, b2)};
        }
  return FiniteSolution(n, std::move(t), a.tag());
}

namespace {

// Per-element signature used to prune the equivalence search: the fixed-point
// count of psi_x together with the multisets of s-orbit sizes of the pairs
// (x, *) and (*, x).
std::vector<std::vector<int>> signatures(const FiniteSolution& s) {
  int n = s.size();
  std::vector<int> orbit_size(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  std::vector<bool> seen(static_cast<size_t>(n) * static_cast<size_t>(n), false);
  bool bij = s.is_bijective();
  for (int p = 0; p < n * n; ++p) {
    if (seen[static_cast<size_t>(p)]) continue;
    // walk the forward orbit; for bijections these are cycles
    std::vector<int> path;
    int q = p;
    while (!seen[static_cast<size_t>(q)]) {
      seen[static_cast<size_t>(q)] = true;
      path.push_back(q);
      auto [a, b] = s.apply(q / n, q % n);
      q = a * n + b;
    }
    int size = static_cast<int>(path.size());
    for (int r : path) orbit_size[static_cast<size_t>(r)] = bij ? size : -1;
  }
  std::vector<std::vector<int>> sig(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    int fixed = 0;
    for (int y = 0; y < n; ++y)
      if (s.psi(x, y) == y) ++fixed;
    std::vector<int> row{fixed}, left, right;
    for (int y = 0; y < n; ++y) {
      left.push_back(orbit_size[static_cast<size_t>(x * n + y)]);
      right.push_back(orbit_size[static_cast<size_t>(y * n + x)]);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    row.insert(row.end(), left.begin(), left.end());
    row.insert(row.end(), right.begin(), right.end());
    sig[static_cast<size_t>(x)] = std::move(row);
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> equivalence(const FiniteSolution& s1, const FiniteSolution& s2) {
  if (s1.size() != s2.size()) return std::nullopt;
  int n = s1.size();
  auto sig1 = signatures(s1), sig2 = signatures(s2);
  {
    auto a = sig1, b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> f(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto consistent = [&](int last) {
    for (int x = 0; x <= last; ++x)
      for (int y = 0; y <= last; ++y) {
        auto [a, b] = s1.apply(x, y);
        if (f[static_cast<size_t>(a)] < 0 || f[static_cast<size_t>(b)] < 0) continue;
        auto [c, d] = s2.apply(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]);
        if (c != f[static_cast<size_t>(a)] || d != f[static_cast<size_t>(b)]) return false;
      }
    return true;
  };
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used[static_cast<size_t>(img)]) continue;
      if (sig1[static_cast<size_t>(x)] != sig2[static_cast<size_t>(img)]) continue;
      f[static_cast<size_t>(x)] = img;
      used[static_cast<size_t>(img)] = true;
      if (consistent(x) && rec(x + 1)) return true;
      f[static_cast<size_t>(x)] = -1;
      used[static_cast<size_t>(img)] = false;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

int LeftGroupAnalysis::pi_E(int x) const { return circ(x, inv_G(pi_G(x))); }

int LeftGroupAnalysis::inv_G(int g) const {
  int gg = pi_G(g);
  for (int h : group_part)
    if (circ(gg, h) == unit) return h;
  fail(errc::structure_violation, "no inverse in group part", std::to_string(g));
}

const std::vector<int>& LeftGroupAnalysis::nu(int y_prime) const {
  return nu_classes_[static_cast<size_t>(psi_class[static_cast<size_t>(y_prime)])];
}

std::vector<int> LeftGroupAnalysis::mu(int x_prime) const {
  std::set<int> out;
  for (int e : idempotents) out.insert(circ(e, x_prime));
  return {out.begin(), out.end()};
}

int LeftGroupAnalysis::rep_of_psi_table(const std::vector<int>& p) const {
  for (size_t i = 0; i < retract_reps.size(); ++i)
    if (psi[static_cast<size_t>(retract_reps[i])] == p) return retract_reps[i];
  fail(errc::structure_violation, "permutation not in Psi");
}

LeftGroupAnalysis left_group_analysis(const FiniteSolution& s) {
  std::pair<std::pair<int, int>, std::pair<int, int>> w;
  if (!s.is_bijective(&w))
    fail(errc::not_bijective, "left_group_analysis requires a bijective solution");
  if (!verify_equation(s, eq_tag::rpe))
    fail(errc::not_rpe, "left_group_analysis requires an RPE solution");
  int n = s.size();
  LeftGroupAnalysis g;
  g.n = n;
  g.psi.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  g.op_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      g.psi[static_cast<size_t>(y)][static_cast<size_t>(x)] = s.psi(y, x);
      g.op_[static_cast<size_t>(y * n + x)] = s.circ(y, x);
    }
  // Every psi_x must be the identity or fixed-point free.
  std::vector<int> id(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
  for (int x = 0; x < n; ++x) {
    const auto& p = g.psi[static_cast<size_t>(x)];
    if (p == id) continue;
    for (int i = 0; i < n; ++i)
      if (p[static_cast<size_t>(i)] == i)
        fail(errc::structure_violation,
             "psi has a fixed point but is not the identity", "x=" + std::to_string(x));
  }
  for (int x = 0; x < n; ++x)
    if (g.circ(x, x) == x) g.idempotents.push_back(x);
  if (g.idempotents.empty()) fail(errc::structure_violation, "no idempotent");
  for (int e : g.idempotents)
    if (g.psi[static_cast<size_t>(e)] == id) {
      g.unit = e;
      break;
    }
  if (g.unit < 0) fail(errc::structure_violation, "no idempotent with psi = id");
  {
    std::set<int> gp;
    for (int x = 0; x < n; ++x) gp.insert(g.circ(g.unit, x));
    g.group_part.assign(gp.begin(), gp.end());
  }
  // (S, o) must be the left group E x G.
  if (static_cast<int>(g.idempotents.size()) * static_cast<int>(g.group_part.size()) != n)
    fail(errc::structure_violation, "|E| * |G| != |S|");
  {
    std::set<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x) pairs.insert({g.pi_E(x), g.pi_G(x)});
    if (static_cast<int>(pairs.size()) != n)
      fail(errc::structure_violation, "E x G coordinates do not separate S");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int p = g.circ(x, y);
        if (g.pi_E(p) != g.pi_E(x) || g.pi_G(p) != g.pi_G(g.circ(g.pi_G(x), g.pi_G(y))))
          fail(errc::structure_violation, "o is not the left-group product",
               "(" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
  }
  // Psi closed under composition.
  {
    std::set<std::vector<int>> distinct(g.psi.begin(), g.psi.end());
    for (const auto& p : distinct)
      for (const auto& q : distinct) {
        std::vector<int> pq(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
          pq[static_cast<size_t>(i)] = p[static_cast<size_t>(q[static_cast<size_t>(i)])];
        if (!distinct.count(pq))
          fail(errc::structure_violation, "Psi not closed under composition");
      }
  }
  // Retract classes on E; representatives are smallest indices.
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int e : g.idempotents) classes[g.psi[static_cast<size_t>(e)]].push_back(e);
  size_t cls = classes.begin()->second.size();
  std::vector<std::pair<int, std::vector<int>>> reps;
  for (auto& [p, members] : classes) {
    if (members.size() != cls)
      fail(errc::structure_violation, "retract classes of unequal size");
    reps.emplace_back(members.front(), p);
  }
  std::sort(reps.begin(), reps.end());
  for (auto& [rep, p] : reps) g.retract_reps.push_back(rep);
  g.class_size = static_cast<int>(cls);
  // nu classes per representative, and the class index of every y.
  g.psi_class.assign(static_cast<size_t>(n), -1);
  g.nu_classes_.assign(reps.size(), {});
  for (int y = 0; y < n; ++y) {
    for (size_t c = 0; c < reps.size(); ++c)
      if (g.psi[static_cast<size_t>(y)] == reps[c].second) {
        g.psi_class[static_cast<size_t>(y)] = static_cast<int>(c);
        g.nu_classes_[c].push_back(y);
        break;
      }
    if (g.psi_class[static_cast<size_t>(y)] < 0)
      fail(errc::structure_violation, "psi_y not among idempotent psi maps",
           "y=" + std::to_string(y));
  }
  return g;
}

}  // namespace pentagon
