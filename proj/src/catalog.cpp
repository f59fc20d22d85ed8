#include "pentagon/catalog.hpp"

namespace pentagon {

namespace {

FiniteSolution tagged(FiniteSolution s, eq_tag t) {
  s.set_tag(t);
  return s;
}

}  // namespace

FiniteSolution group_solution(const FiniteGroup& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<size_t>(x * n + y)] = {x, g.mul(x, y)};
  return FiniteSolution(n, std::move(t), eq_tag::rpe);
}

FiniteSolution dual_group_solution(const FiniteGroup& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<size_t>(x * n + y)] = {g.mul(x, g.inverse(y)), y};
  return FiniteSolution(n, std::move(t), eq_tag::rpe);
}

FiniteSolution pe_group_solution(const FiniteGroup& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> t(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<size_t>(x * n + y)] = {g.mul(x, y), y};
  return FiniteSolution(n, std::move(t), eq_tag::pe);
}

std::vector<std::string> catalog_group_names() {
  return {"Z1",  "Z2",  "Z3", "Z4",     "Z2xZ2", "Z5",  "Z6",     "S3",
          "Z7",  "Z8",  "Z2xZ4", "Z2xZ2xZ2", "D4",    "Q8",  "Z9",     "Z3xZ3",
          "Z10", "D5",  "Z11", "Z12",   "Z2xZ6", "D6",  "A4",     "Dic3"};
}

FiniteGroup catalog_group(const std::string& name) {
  auto cyc = [](int n) { return FiniteGroup::cyclic(n); };
  if (name == "Z1") return cyc(1);
  if (name == "Z2") return cyc(2);
  if (name == "Z3") return cyc(3);
  if (name == "Z4") return cyc(4);
  if (name == "Z5") return cyc(5);
  if (name == "Z6") return cyc(6);
  if (name == "Z7") return cyc(7);
  if (name == "Z8") return cyc(8);
  if (name == "Z9") return cyc(9);
  if (name == "Z10") return cyc(10);
  if (name == "Z11") return cyc(11);
  if (name == "Z12") return cyc(12);
  if (name == "Z2xZ2") return FiniteGroup::direct_product(cyc(2), cyc(2));
  if (name == "Z2xZ4") return FiniteGroup::direct_product(cyc(2), cyc(4));
  if (name == "Z2xZ2xZ2")
    return FiniteGroup::direct_product(FiniteGroup::direct_product(cyc(2), cyc(2)), cyc(2));
  if (name == "Z3xZ3") return FiniteGroup::direct_product(cyc(3), cyc(3));
  if (name == "Z2xZ6") return FiniteGroup::direct_product(cyc(2), cyc(6));
  if (name == "S3") return FiniteGroup::dihedral(3);
  if (name == "D4") return FiniteGroup::dihedral(4);
  if (name == "D5") return FiniteGroup::dihedral(5);
  if (name == "D6") return FiniteGroup::dihedral(6);
  if (name == "Q8") return FiniteGroup::quaternion8();
  if (name == "A4") return FiniteGroup::alternating4();
  if (name == "Dic3") return FiniteGroup::dicyclic3();
  fail(errc::unknown_name, "unknown catalog group: " + name);
}

FiniteSolution catalog_solution(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon == std::string::npos ? name.size() : colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (kind == "identity") {
    int n = std::stoi(arg);
    if (n < 1 || n > 16) fail(errc::unknown_name, "identity solution size out of range");
    return tagged(FiniteSolution::identity(n), eq_tag::rpe);
  }
  if (kind == "group_solution") return group_solution(catalog_group(arg));
  if (kind == "dual_solution") return dual_group_solution(catalog_group(arg));
  if (kind == "pe_solution") return pe_group_solution(catalog_group(arg));
  if (kind == "hopf_example" && arg == "HxGdual") {
    // s((a,g),(b,h)) = ((a b^{-1}, g), (b, h g)) on (Z/2 x Z/2)
    int n = 4;
    auto idx = [](int a, int g) { return 2 * a + g; };
    std::vector<std::pair<int, int>> t(16);
    for (int a = 0; a < 2; ++a)
      for (int g = 0; g < 2; ++g)
        for (int b = 0; b < 2; ++b)
          for (int h = 0; h < 2; ++h)
            t[static_cast<size_t>(idx(a, g) * n + idx(b, h))] = {idx((a + b) % 2, g),
                                                                 idx(b, (h + g) % 2)};
    return FiniteSolution(n, std::move(t), eq_tag::rpe);
  }
  fail(errc::unknown_name, "unknown catalog solution: " + name);
}

FinHopf catalog_hopf(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon == std::string::npos ? name.size() : colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (kind == "group-algebra") return group_algebra(catalog_group(arg));
  if (kind == "dual-group-algebra") return dual_group_algebra(catalog_group(arg));
  if (kind == "trivial") return trivial_hopf();
  fail(errc::unknown_name, "unknown catalog Hopf algebra: " + name);
}

}  // namespace pentagon
