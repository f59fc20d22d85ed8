#include "pentagon/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace pentagon {

namespace {

int worker_count(int jobs) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("PENTAGON_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) hw = v;
  }
  return std::max(1, std::min(hw, jobs));
}

bool passes(const std::vector<int>& images, int n, eq_tag eq) {
  FiniteSolution s = [&] {
    std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int p = 0; p < n * n; ++p)
      t[static_cast<size_t>(p)] = {images[static_cast<size_t>(p)] / n,
                                   images[static_cast<size_t>(p)] % n};
    return FiniteSolution(n, std::move(t), eq);
  }();
  return verify_equation(s, eq);
}

FiniteSolution from_images(const std::vector<int>& images, int n, eq_tag eq) {
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int p = 0; p < n * n; ++p)
    t[static_cast<size_t>(p)] = {images[static_cast<size_t>(p)] / n,
                                 images[static_cast<size_t>(p)] % n};
  return FiniteSolution(n, std::move(t), eq);
}

}  // namespace

std::vector<FiniteSolution> enumerate_solutions(int n, eq_tag eq, bool bijective_only,
                                                bool up_to_equivalence) {
  if (eq != eq_tag::rpe && eq != eq_tag::pe)
    fail(errc::bad_input, "enumerate_solutions: tag must be rpe or pe");
  std::vector<FiniteSolution> out;
  if (bijective_only) {
    if (n > 3) fail(errc::size_too_large, "exhaustive bijective mode is bounded at n <= 3");
    int np = n * n;
    // partition by the image of the first pair, workers over branches
    int branches = np;
    int nw = worker_count(branches);
    std::vector<std::vector<std::vector<int>>> found(static_cast<size_t>(branches));
    auto run_branch = [&](int first) {
      std::vector<int> rest;
      for (int v = 0; v < np; ++v)
        if (v != first) rest.push_back(v);
      std::vector<int> images(static_cast<size_t>(np));
      images[0] = first;
      do {
        for (size_t i = 0; i < rest.size(); ++i) images[i + 1] = rest[i];
        if (passes(images, n, eq)) found[static_cast<size_t>(first)].push_back(images);
      } while (std::next_permutation(rest.begin(), rest.end()));
    };
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < nw; ++w)
      pool.emplace_back([&] {
        for (int b = next.fetch_add(1); b < branches; b = next.fetch_add(1)) run_branch(b);
      });
    for (auto& t : pool) t.join();
    for (int b = 0; b < branches; ++b)
      for (const auto& images : found[static_cast<size_t>(b)]) out.push_back(from_images(images, n, eq));
  } else {
    if (n > 2) fail(errc::size_too_large, "exhaustive non-bijective mode is bounded at n <= 2");
    int np = n * n;
    std::vector<int> images(static_cast<size_t>(np), 0);
    while (true) {
      if (passes(images, n, eq)) out.push_back(from_images(images, n, eq));
      int pos = np - 1;
      while (pos >= 0 && images[static_cast<size_t>(pos)] == np - 1) {
        images[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++images[static_cast<size_t>(pos)];
    }
  }
  if (up_to_equivalence) {
    std::vector<FiniteSolution> reps;
    for (const auto& s : out) {
      bool known = false;
      for (const auto& r : reps)
        if (equivalence(s, r)) {
          known = true;
          break;
        }
      if (!known) reps.push_back(s);
    }
    out = std::move(reps);
  }
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> enumerate_splittings(
    const FiniteGroup& g) {
  if (g.order() > 24) fail(errc::size_too_large, "splitting enumeration is bounded at |G| <= 24");
  auto subs = g.subgroups();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& a : subs) {
    if (!g.is_normal(a)) continue;
    if (!g.restricted_to(a).is_abelian()) continue;
    for (const auto& n : subs) {
      if (a.size() * n.size() != static_cast<size_t>(g.order())) continue;
      std::vector<int> meet;
      std::set_intersection(a.begin(), a.end(), n.begin(), n.end(), std::back_inserter(meet));
      if (meet.size() == 1) out.emplace_back(a, n);
    }
  }
  return out;
}

std::vector<PhiBasisEntry> enumerate_phi_bases(const FiniteGroup& g) {
  std::vector<PhiBasisEntry> out;
  for (const auto& [a, n] : enumerate_splittings(g)) {
    FourierBasis fb = fourier_basis_of_group_algebra(g, a, n);
    out.push_back(PhiBasisEntry{a, n, fb.basis, fb.solution});
  }
  return out;
}

namespace {

std::vector<int> support_of(const Vec& v) {
  std::vector<int> s;
  for (int i = 0; i < v.dim; ++i)
    if (!v[i].is_zero()) s.push_back(i);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Vec left_translate(const FiniteGroup& g, int x, const Vec& v) {
  Vec r(v.dim, v.m);
  for (int h = 0; h < g.order(); ++h)
    if (!v[h].is_zero()) r[g.mul(x, h)] = v[h];
  return r;
}

Vec right_translate(const FiniteGroup& g, const Vec& v, int x) {
  Vec r(v.dim, v.m);
  for (int h = 0; h < g.order(); ++h)
    if (!v[h].is_zero()) r[g.mul(h, x)] = v[h];
  return r;
}

}  // namespace

std::variant<RecognizedBasis, RecognitionFailure> recognize_basis(const FiniteGroup& g,
                                                                  const Mat& basis) {
  using Fail = RecognitionFailure;
  int ng = g.order();
  long m = basis.m;
  FinHopf kg = group_algebra(g);
  if (m != 1) kg = kg.lifted(m);
  auto restricted = is_phi_set_theoretic(kg, basis);
  if (std::holds_alternative<PhiBasisFailure>(restricted)) {
    const auto& f = std::get<PhiBasisFailure>(restricted);
    std::string coeffs;
    for (int i = 0; i < f.coefficients.dim; ++i)
      if (!f.coefficients[i].is_zero())
        coeffs += " [" + std::to_string(i / ng) + "," + std::to_string(i % ng) +
                  "]=" + f.coefficients[i].str();
    return Fail{"not set-theoretic",
                "Phi(b" + std::to_string(f.b) + " (x) b" + std::to_string(f.c) +
                    ") is not a pure basis tensor with coefficient 1:" + coeffs};
  }
  FiniteSolution sol = std::get<FiniteSolution>(restricted);
  std::vector<Vec> cols;
  for (int j = 0; j < ng; ++j) cols.push_back(basis.col(j));

  // B1 and A
  std::vector<int> b1;
  for (int j = 0; j < ng; ++j)
    if (!cols[static_cast<size_t>(j)][g.identity()].is_zero()) b1.push_back(j);
  if (b1.empty()) return Fail{"B1", "no basis element supports the identity"};
  std::set<int> a_set;
  for (int b : b1)
    for (int x : support_of(cols[static_cast<size_t>(b)])) a_set.insert(x);
  std::vector<int> a_elements(a_set.begin(), a_set.end());
  if (!g.is_subgroup(a_elements)) return Fail{"A subgroup", "A = " + join(a_elements)};
  for (int b : b1)
    if (support_of(cols[static_cast<size_t>(b)]) != a_elements)
      return Fail{"equal supports", "supp(b" + std::to_string(b) + ") != A"};
  FiniteGroup a_grp = g.restricted_to(a_elements);
  if (!a_grp.is_abelian()) return Fail{"A abelian", "A = " + join(a_elements)};
  if (!g.is_normal(a_elements)) return Fail{"A normal", "A = " + join(a_elements)};
  int na = static_cast<int>(a_elements.size());
  if (static_cast<int>(b1.size()) != na)
    return Fail{"span B1", "|B1| = " + std::to_string(b1.size()) + " != |A| = " + std::to_string(na)};
  {
    std::vector<Vec> b1_vecs;
    for (int b : b1) b1_vecs.push_back(cols[static_cast<size_t>(b)]);
    if (rank(b1_vecs) != na) return Fail{"span B1", "B1 does not span k[A]"};
  }
  auto a_pos = [&](int elt) {
    auto it = std::lower_bound(a_elements.begin(), a_elements.end(), elt);
    return it != a_elements.end() && *it == elt ? static_cast<int>(it - a_elements.begin()) : -1;
  };

  // characters chi_c from the first coordinate of the induced solution
  int b0 = b1.front();
  std::map<int, std::vector<Cyc>> chi;  // basis index in B1 -> values on A positions
  for (int c : b1) {
    std::vector<Cyc> values(static_cast<size_t>(na), Cyc::zero(m));
    for (int xp = 0; xp < na; ++xp) {
      int x = a_elements[static_cast<size_t>(xp)];
      // chi_c(x) = delta_x(psi_c(b0)) / delta_x(b0), checked against every b
      int psi_idx = sol.apply(b0, c).first;
      values[static_cast<size_t>(xp)] = cols[static_cast<size_t>(psi_idx)][x] /
                                        cols[static_cast<size_t>(b0)][x];
      for (int b : b1) {
        int pi = sol.apply(b, c).first;
        if (cols[static_cast<size_t>(pi)][x] / cols[static_cast<size_t>(b)][x] !=
            values[static_cast<size_t>(xp)])
          return Fail{"characters", "chi depends on the reference element at (b" +
                                        std::to_string(b) + ", c" + std::to_string(c) + ")"};
      }
    }
    // multiplicative?
    for (int xp = 0; xp < na; ++xp)
      for (int yp = 0; yp < na; ++yp) {
        int prod = a_pos(g.mul(a_elements[static_cast<size_t>(xp)], a_elements[static_cast<size_t>(yp)]));
        if (values[static_cast<size_t>(prod)] !=
            values[static_cast<size_t>(xp)] * values[static_cast<size_t>(yp)])
          return Fail{"characters", "chi_c not multiplicative, c = b" + std::to_string(c)};
      }
    // eigenvector identity g.c = chi_c(g) c
    for (int xp = 0; xp < na; ++xp) {
      Vec lhs = left_translate(g, a_elements[static_cast<size_t>(xp)], cols[static_cast<size_t>(c)]);
      Vec rhs = values[static_cast<size_t>(xp)] * cols[static_cast<size_t>(c)];
      if (!(lhs == rhs))
        return Fail{"characters", "g c != chi_c(g) c at c = b" + std::to_string(c)};
    }
    chi[c] = std::move(values);
  }
  for (int c : b1)
    for (int c2 : b1)
      if (c < c2 && chi[c] == chi[c2])
        return Fail{"characters", "chi_{b" + std::to_string(c) + "} = chi_{b" + std::to_string(c2) + "}"};

  // every b in B1 is lambda e_{chi_b} with one common lambda
  auto e_of_chi = [&](const std::vector<Cyc>& values) {
    Vec e(ng, m);
    for (int xp = 0; xp < na; ++xp) {
      int elt = a_elements[static_cast<size_t>(xp)];
      int inv_pos = a_pos(g.inverse(elt));
      e[elt] = values[static_cast<size_t>(inv_pos)] / Cyc(Rational(na), m);
    }
    return e;
  };
  Cyc lambda = cols[static_cast<size_t>(b0)][g.identity()] * Cyc(Rational(na), m);
  for (int b : b1) {
    Cyc lb = cols[static_cast<size_t>(b)][g.identity()] * Cyc(Rational(na), m);
    if (lb != lambda)
      return Fail{"common scalar", "lambda(b" + std::to_string(b) + ") = " + lb.str() +
                                       " != " + lambda.str()};
    Vec want = lambda * e_of_chi(chi[b]);
    if (!(want == cols[static_cast<size_t>(b)]))
      return Fail{"common scalar", "b" + std::to_string(b) + " != lambda e_chi"};
  }

  // single-coset supports and purity for all basis elements
  std::vector<int> coset_rep(static_cast<size_t>(ng), -1);  // per basis element: first support
  std::vector<int> chi_index(static_cast<size_t>(ng), -1);  // position of chi in b1 order
  std::vector<Cyc> mu(static_cast<size_t>(ng), Cyc::zero(m));
  for (int b = 0; b < ng; ++b) {
    std::vector<int> supp = support_of(cols[static_cast<size_t>(b)]);
    int g0 = supp.front();
    for (int x : supp) {
      // x in A g0 <=> x g0^{-1} in A
      if (a_pos(g.mul(x, g.inverse(g0))) < 0)
        return Fail{"single coset", "supp(b" + std::to_string(b) + ") is not inside one coset"};
    }
    // w = b g0^{-1} lives in k[A]; purity: w = mu e_chi for one chi
    Vec w = right_translate(g, cols[static_cast<size_t>(b)], g.inverse(g0));
    if (w[g.identity()].is_zero())
      return Fail{"purity", "b" + std::to_string(b) + " misses its own coset representative"};
    std::vector<Cyc> cand(static_cast<size_t>(na), Cyc::zero(m));
    for (int xp = 0; xp < na; ++xp) {
      int x_inv = g.inverse(a_elements[static_cast<size_t>(xp)]);
      cand[static_cast<size_t>(xp)] = w[x_inv] / w[g.identity()];
    }
    int ci = -1;
    for (size_t k = 0; k < b1.size(); ++k)
      if (chi[b1[k]] == cand) {
        ci = static_cast<int>(k);
        break;
      }
    if (ci < 0) return Fail{"purity", "b" + std::to_string(b) + " is not on a character line"};
    Cyc mub = w[g.identity()] * Cyc(Rational(na), m);
    Vec want = right_translate(g, mub * e_of_chi(chi[b1[static_cast<size_t>(ci)]]), g0);
    if (!(want == cols[static_cast<size_t>(b)]))
      return Fail{"purity", "b" + std::to_string(b) + " != mu e_chi g"};
    coset_rep[static_cast<size_t>(b)] = g0;
    chi_index[static_cast<size_t>(b)] = ci;
    mu[static_cast<size_t>(b)] = mub;
  }

  // choose the coset representatives determined by the basis scalars
  std::map<int, std::vector<int>> cosets;  // canonical coset key -> basis elems
  auto coset_key = [&](int x) {
    int best = ng;
    for (int aa : a_elements) best = std::min(best, g.mul(aa, x));
    return best;
  };
  for (int b = 0; b < ng; ++b) cosets[coset_key(coset_rep[static_cast<size_t>(b)])].push_back(b);
  std::vector<std::pair<int, int>> rep_of_coset;  // (coset key, chosen u)
  std::vector<int> u_of_basis(static_cast<size_t>(ng), -1);
  for (auto& [key, members] : cosets) {
    if (static_cast<int>(members.size()) != na)
      return Fail{"representatives",
                  "coset " + std::to_string(key) + " carries " + std::to_string(members.size()) +
                      " basis elements, expected " + std::to_string(na)};
    int g0 = key;
    // re-anchor scalars at the canonical coset key
    int found = -1;
    for (int aa = 0; aa < na && found < 0; ++aa) {
      int u = g.mul(a_elements[static_cast<size_t>(aa)], g0);
      bool all_match = true;
      for (int b : members) {
        // b = lambda e_chi u demands chi(a') = mu'_b / lambda at the anchor u
        Vec want = right_translate(g, lambda * e_of_chi(chi[b1[static_cast<size_t>(
                                           chi_index[static_cast<size_t>(b)])]]),
                                   u);
        if (!(want == cols[static_cast<size_t>(b)])) {
          all_match = false;
          break;
        }
      }
      if (all_match) found = u;
    }
    if (found < 0)
      return Fail{"representatives",
                  "no coset representative makes all scalars equal lambda in coset " +
                      std::to_string(key)};
    rep_of_coset.emplace_back(key, found);
    for (int b : members) u_of_basis[static_cast<size_t>(b)] = found;
  }
  std::vector<int> n_elements;
  for (auto& [key, u] : rep_of_coset) n_elements.push_back(u);
  std::sort(n_elements.begin(), n_elements.end());
  // cocycle vanishing: the representatives must close under multiplication
  for (int u : n_elements)
    for (int v : n_elements) {
      int uv = g.mul(u, v);
      if (!std::binary_search(n_elements.begin(), n_elements.end(), uv)) {
        int w = -1;
        for (int cand : n_elements)
          if (coset_key(cand) == coset_key(uv)) w = cand;
        std::string sigma = w >= 0 ? std::to_string(g.mul(uv, g.inverse(w))) : "?";
        return Fail{"cocycle", "sigma(" + std::to_string(u) + "," + std::to_string(v) +
                                   ") = " + sigma + " != identity"};
      }
    }

  // final identity: the induced table must be the dual-action formula
  std::vector<std::vector<Cyc>> chi_list;
  for (int c : b1) chi_list.push_back(chi[c]);
  auto chi_find = [&](const std::vector<Cyc>& v) {
    for (size_t i = 0; i < chi_list.size(); ++i)
      if (chi_list[i] == v) return static_cast<int>(i);
    return -1;
  };
  auto chi_mul = [&](int i, int j) {
    std::vector<Cyc> v(static_cast<size_t>(na), Cyc::zero(m));
    for (int xp = 0; xp < na; ++xp)
      v[static_cast<size_t>(xp)] =
          chi_list[static_cast<size_t>(i)][static_cast<size_t>(xp)] *
          chi_list[static_cast<size_t>(j)][static_cast<size_t>(xp)];
    return chi_find(v);
  };
  auto chi_inv = [&](int i) {
    std::vector<Cyc> v(static_cast<size_t>(na), Cyc::zero(m));
    for (int xp = 0; xp < na; ++xp)
      v[static_cast<size_t>(xp)] =
          chi_list[static_cast<size_t>(i)]
                  [static_cast<size_t>(a_pos(g.inverse(a_elements[static_cast<size_t>(xp)])))];
    return chi_find(v);
  };
  auto dual_act = [&](int u, int i) {
    std::vector<Cyc> v(static_cast<size_t>(na), Cyc::zero(m));
    for (int xp = 0; xp < na; ++xp) {
      int conj = g.mul(g.mul(g.inverse(u), a_elements[static_cast<size_t>(xp)]), u);
      v[static_cast<size_t>(xp)] = chi_list[static_cast<size_t>(i)][static_cast<size_t>(a_pos(conj))];
    }
    return chi_find(v);
  };
  auto basis_of = [&](int ci, int u) {
    for (int b = 0; b < ng; ++b)
      if (chi_index[static_cast<size_t>(b)] == ci && u_of_basis[static_cast<size_t>(b)] == u)
        return b;
    return -1;
  };
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j) {
      int u = u_of_basis[static_cast<size_t>(i)], v = u_of_basis[static_cast<size_t>(j)];
      int ub = dual_act(u, chi_index[static_cast<size_t>(j)]);
      if (ub < 0) return Fail{"solution table", "dual action left the character list"};
      int iub = chi_inv(ub);
      if (iub < 0) return Fail{"solution table", "character inverse missing"};
      int first = basis_of(chi_mul(chi_index[static_cast<size_t>(i)], iub), u);
      int uv = g.mul(u, v);
      int uv_rep = -1;
      for (int cand : n_elements)
        if (coset_key(cand) == coset_key(uv)) uv_rep = cand;
      int second = basis_of(ub, uv_rep);
      if (first < 0 || second < 0 || sol.apply(i, j) != std::make_pair(first, second))
        return Fail{"solution table", "pair (b" + std::to_string(i) + ", b" + std::to_string(j) +
                                          ") disagrees with the dual-action formula"};
    }

  RecognizedBasis out{a_elements, n_elements, lambda, {}, chi_list, sol};
  for (int b = 0; b < ng; ++b)
    out.assignment.emplace_back(chi_index[static_cast<size_t>(b)],
                                u_of_basis[static_cast<size_t>(b)]);
  return out;
}

bool SupportReport::all_ok() const {
  for (const auto& it : items)
    if (!it.ok) return false;
  return true;
}

SupportReport support_invariants(const FiniteGroup& g, const Mat& basis) {
  SupportReport rep;
  int ng = g.order();
  long m = basis.m;
  FinHopf kg = group_algebra(g);
  if (m != 1) kg = kg.lifted(m);
  auto restricted = is_phi_set_theoretic(kg, basis);
  if (std::holds_alternative<PhiBasisFailure>(restricted)) {
    rep.items.push_back({"phi-set theoretic", false, "basis is not Phi-set theoretic"});
    return rep;
  }
  FiniteSolution sol = std::get<FiniteSolution>(restricted);
  std::vector<Vec> cols;
  std::vector<std::vector<int>> supp;
  for (int j = 0; j < ng; ++j) {
    cols.push_back(basis.col(j));
    supp.push_back(support_of(cols.back()));
  }
  SupportReport::Item prod_subset{"supp(c o b) within supp(b) supp(c)", true, ""};
  SupportReport::Item translate{"g supp(c) = supp(c o b) with scalar identity", true, ""};
  SupportReport::Item first_coord{"supp(b) = supp(psi_c(b))", true, ""};
  SupportReport::Item unit_b{"1 in supp(b) forces supp(c o b) = supp(c)", true, ""};
  SupportReport::Item unit_c{"1 in supp(c) forces supp(b) within supp(c o b)", true, ""};
  SupportReport::Item bound{"|supp(b)| <= |supp(c)|^2", true, ""};
  for (int b = 0; b < ng; ++b)
    for (int c = 0; c < ng; ++c) {
      auto [psi_cb, c_circ_b] = sol.apply(b, c);
      const auto& sb = supp[static_cast<size_t>(b)];
      const auto& sc = supp[static_cast<size_t>(c)];
      const auto& scb = supp[static_cast<size_t>(c_circ_b)];
      std::string at = " at (b" + std::to_string(b) + ", c" + std::to_string(c) + ")";
      {
        std::set<int> prod;
        for (int x : sb)
          for (int y : sc) prod.insert(g.mul(x, y));
        for (int z : scb)
          if (!prod.count(z) && prod_subset.ok) {
            prod_subset.ok = false;
            prod_subset.witness = std::to_string(z) + at;
          }
      }
      for (int x : sb) {
        std::set<int> xs;
        for (int y : sc) xs.insert(g.mul(x, y));
        if (!(std::vector<int>(xs.begin(), xs.end()) == scb) && translate.ok) {
          translate.ok = false;
          translate.witness = "translate by " + std::to_string(x) + at;
        }
        Vec lhs = cols[static_cast<size_t>(b)][x] *
                  left_translate(g, x, cols[static_cast<size_t>(c)]);
        Vec rhs = cols[static_cast<size_t>(psi_cb)][x] * cols[static_cast<size_t>(c_circ_b)];
        if (!(lhs == rhs) && translate.ok) {
          translate.ok = false;
          translate.witness = "scalar identity at g = " + std::to_string(x) + at;
        }
      }
      if (!(supp[static_cast<size_t>(psi_cb)] == sb) && first_coord.ok) {
        first_coord.ok = false;
        first_coord.witness = at;
      }
      if (!cols[static_cast<size_t>(b)][g.identity()].is_zero() && !(scb == sc) && unit_b.ok) {
        unit_b.ok = false;
        unit_b.witness = at;
      }
      if (!cols[static_cast<size_t>(c)][g.identity()].is_zero() && unit_c.ok) {
        for (int z : sb)
          if (!std::binary_search(scb.begin(), scb.end(), z)) {
            unit_c.ok = false;
            unit_c.witness = at;
            break;
          }
      }
      if (sb.size() > sc.size() * sc.size() && bound.ok) {
        bound.ok = false;
        bound.witness = at;
      }
    }
  rep.items = {prod_subset, translate, first_coord, unit_b, unit_c, bound};
  return rep;
}

}  // namespace pentagon
