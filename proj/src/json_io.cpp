#include "pentagon/json_io.hpp"

namespace pentagon {

json to_json(const Rational& q) {
  return json::array({numerator(q).str(), denominator(q).str()});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(errc::bad_input, "rational: expected [num, den]");
  Int num(j[0].get<std::string>()), den(j[1].get<std::string>());
  if (den <= 0) fail(errc::bad_input, "rational: denominator must be positive");
  return Rational(num, den);
}

json to_json(const Cyc& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
  return json{{"m", c.conductor()}, {"c", coeffs}};
}

Cyc cyc_from_json(const json& j) {
  long m = j.at("m").get<long>();
  std::vector<Rational> coeffs;
  for (const auto& e : j.at("c")) coeffs.push_back(rational_from_json(e));
  if (static_cast<long>(coeffs.size()) != euler_phi(m))
    fail(errc::bad_input, "cyclotomic scalar: expected phi(m) coefficients");
  return Cyc(m, std::move(coeffs));
}

json to_json(const Vec& v) {
  json e = json::array();
  for (int i = 0; i < v.dim; ++i) e.push_back(to_json(v[i]));
  return json{{"dim", v.dim}, {"m", v.m}, {"e", e}};
}

Vec vec_from_json(const json& j) {
  Vec v(j.at("dim").get<int>(), j.at("m").get<long>());
  const auto& e = j.at("e");
  if (static_cast<int>(e.size()) != v.dim) fail(errc::bad_input, "vector: entry count mismatch");
  for (int i = 0; i < v.dim; ++i) v[i] = cyc_from_json(e[static_cast<size_t>(i)]).lifted(v.m);
  return v;
}

json to_json(const Mat& a) {
  json nz = json::array();
  for (const auto& [ij, v] : a.a) nz.push_back(json::array({ij.first, ij.second, to_json(v)}));
  return json{{"rows", a.rows}, {"cols", a.cols}, {"m", a.m}, {"nz", nz}};
}

Mat mat_from_json(const json& j) {
  Mat a(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("m").get<long>());
  for (const auto& e : j.at("nz")) {
    int r = e[0].get<int>(), c = e[1].get<int>();
    if (r < 0 || r >= a.rows || c < 0 || c >= a.cols)
      fail(errc::bad_input, "matrix: index out of range");
    a.set(r, c, cyc_from_json(e[2]).lifted(a.m));
  }
  return a;
}

json to_json(const Tensor3& t) {
  json nz = json::array();
  for (const auto& [ijk, v] : t.a)
    nz.push_back(json::array({ijk[0], ijk[1], ijk[2], to_json(v)}));
  return json{{"d", t.d}, {"m", t.m}, {"nz", nz}};
}

Tensor3 tensor_from_json(const json& j) {
  Tensor3 t(j.at("d").get<int>(), j.at("m").get<long>());
  for (const auto& e : j.at("nz")) {
    int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
    if (a < 0 || a >= t.d || b < 0 || b >= t.d || c < 0 || c >= t.d)
      fail(errc::bad_input, "tensor: index out of range");
    t.set(a, b, c, cyc_from_json(e[3]).lifted(t.m));
  }
  return t;
}

json to_json(const FiniteSolution& s) {
  json map = json::array();
  int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = s.apply(x, y);
      map.push_back(json::array({x, y, a, b}));
    }
  return json{{"n", n}, {"map", map}, {"equation", eq_tag_name(s.tag())}};
}

FiniteSolution solution_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n), {-1, -1});
  for (const auto& e : j.at("map")) {
    int x = e[0].get<int>(), y = e[1].get<int>();
    if (x < 0 || x >= n || y < 0 || y >= n) fail(errc::bad_input, "solution: pair out of range");
    t[static_cast<size_t>(x * n + y)] = {e[2].get<int>(), e[3].get<int>()};
  }
  for (const auto& [a, b] : t)
    if (a < 0) fail(errc::bad_input, "solution: map must list all n^2 pairs");
  eq_tag tag = j.contains("equation") ? eq_tag_from_name(j["equation"].get<std::string>())
                                      : eq_tag::none;
  return FiniteSolution(n, std::move(t), tag);
}

json to_json(const FiniteGroup& g) {
  json rows = json::array();
  for (int i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < g.order(); ++j2) row.push_back(g.mul(i, j2));
    rows.push_back(row);
  }
  return json{{"n", g.order()}, {"cayley", rows}};
}

FiniteGroup group_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<int> t;
  for (const auto& row : j.at("cayley"))
    for (const auto& e : row) t.push_back(e.get<int>());
  if (static_cast<int>(t.size()) != n * n) fail(errc::bad_input, "group: cayley table size");
  return FiniteGroup(n, std::move(t));
}

json to_json(const MatchedPairGroups& mp) {
  return json{{"b", to_json(mp.b)}, {"n", to_json(mp.n)}, {"ract", mp.ract}, {"lact", mp.lact}};
}

MatchedPairGroups matched_pair_from_json(const json& j) {
  FiniteGroup b = group_from_json(j.at("b"));
  FiniteGroup n = group_from_json(j.at("n"));
  auto read_table = [&](const json& tj, int vmax) {
    std::vector<std::vector<int>> t;
    for (const auto& row : tj) {
      std::vector<int> r;
      for (const auto& e : row) {
        int v = e.get<int>();
        if (v < 0 || v >= vmax) fail(errc::bad_input, "matched pair: action value out of range");
        r.push_back(v);
      }
      t.push_back(std::move(r));
    }
    if (t.size() != static_cast<size_t>(b.order()) ||
        (b.order() > 0 && t[0].size() != static_cast<size_t>(n.order())))
      fail(errc::bad_input, "matched pair: action table shape must be |B| x |N|");
    return t;
  };
  auto ract = read_table(j.at("ract"), b.order());
  auto lact = read_table(j.at("lact"), n.order());
  return MatchedPairGroups{std::move(b), std::move(n), std::move(ract), std::move(lact)};
}

json to_json(const FinHopf& h) {
  json out{{"d", h.d},         {"m", h.m},           {"unit", to_json(h.unit)},
           {"counit", to_json(h.counit)}, {"mult", to_json(h.mult)}, {"comult", to_json(h.comult)}};
  if (h.antipode) out["antipode"] = to_json(*h.antipode);
  return out;
}

FinHopf hopf_from_json(const json& j) {
  FinHopf h;
  h.d = j.at("d").get<int>();
  h.m = j.at("m").get<long>();
  h.unit = vec_from_json(j.at("unit"));
  h.counit = vec_from_json(j.at("counit"));
  h.mult = tensor_from_json(j.at("mult"));
  h.comult = tensor_from_json(j.at("comult"));
  if (j.contains("antipode")) h.antipode = mat_from_json(j.at("antipode"));
  if (h.unit.dim != h.d || h.counit.dim != h.d || h.mult.d != h.d || h.comult.d != h.d)
    fail(errc::bad_input, "hopf: dimension mismatch between components");
  return h;
}

}  // namespace pentagon
