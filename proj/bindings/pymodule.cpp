#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pentagon/catalog.hpp"
#include "pentagon/classifier.hpp"
#include "pentagon/coefficient.hpp"
#include "pentagon/json_io.hpp"

namespace py = pybind11;
using namespace pentagon;

// Exact values do not fit python floats, so the boundary speaks JSON strings
// throughout; the schemas match the CLI file formats.
namespace {

json parse(const std::string& text) { return json::parse(text); }

std::string verify_set(const std::string& solution_json, const std::string& equation) {
  FiniteSolution s = solution_from_json(parse(solution_json));
  json out{{"n", s.size()}, {"ok", verify_equation(s, eq_tag_from_name(equation))}};
  SolutionFlags f = check_flags(s);
  out["commutative"] = f.commutative;
  out["cocommutative"] = f.cocommutative;
  return out.dump();
}

std::string catalog(const std::string& name) {
  if (name.rfind("hopf:", 0) == 0) return to_json(catalog_hopf(name.substr(5))).dump();
  if (name.find(':') != std::string::npos) return to_json(catalog_solution(name)).dump();
  return to_json(catalog_group(name)).dump();
}

std::string coefficient_hopf(const std::string& solution_json, const std::string& side) {
  FiniteSolution s = solution_from_json(parse(solution_json));
  CoefficientAlgebra ca = side == "left" ? build_Hl(s) : build_Hr(s);
  json out{{"hopf", to_json(ca.hopf)}, {"labels", ca.basis.labels}};
  return out.dump();
}

std::string hopf_check(const std::string& hopf_json) {
  FinHopf h = hopf_from_json(parse(hopf_json));
  AxiomReport rep = verify_hopf(h);
  json checks = json::array();
  for (const auto& item : rep.items)
    checks.push_back({{"name", item.name}, {"ok", item.ok}, {"witness", item.witness}});
  return json{{"ok", rep.all_ok()}, {"checks", checks}}.dump();
}

std::string phi_set_theoretic(const std::string& hopf_json, const std::string& basis_json) {
  FinHopf h = hopf_from_json(parse(hopf_json));
  Mat p = mat_from_json(parse(basis_json));
  if (p.m != h.m) {
    long m = std::lcm(p.m, h.m);
    p = p.lifted(m);
    h = h.lifted(m);
  }
  auto r = is_phi_set_theoretic(h, p);
  if (std::holds_alternative<FiniteSolution>(r))
    return json{{"ok", true}, {"solution", to_json(std::get<FiniteSolution>(r))}}.dump();
  const auto& f = std::get<PhiBasisFailure>(r);
  return json{{"ok", false}, {"witness", {f.b, f.c}}}.dump();
}

std::string fourier_basis(const std::string& group_json, const std::vector<int>& a,
                          const std::vector<int>& n) {
  FiniteGroup g = group_from_json(parse(group_json));
  std::vector<int> as = a, ns = n;
  std::sort(as.begin(), as.end());
  std::sort(ns.begin(), ns.end());
  FourierBasis fb = fourier_basis_of_group_algebra(g, as, ns);
  return json{{"basis", to_json(fb.basis)}, {"solution", to_json(fb.solution)}}.dump();
}

std::string recognize(const std::string& group_json, const std::string& basis_json) {
  FiniteGroup g = group_from_json(parse(group_json));
  auto r = recognize_basis(g, mat_from_json(parse(basis_json)));
  if (std::holds_alternative<RecognizedBasis>(r)) {
    const auto& rb = std::get<RecognizedBasis>(r);
    return json{{"ok", true},
                {"a", rb.a_elements},
                {"n", rb.n_elements},
                {"lambda", to_json(rb.lambda)},
                {"solution", to_json(rb.solution)}}
        .dump();
  }
  const auto& f = std::get<RecognitionFailure>(r);
  return json{{"ok", false}, {"stage", f.stage}, {"witness", f.witness}}.dump();
}

std::string enumerate_sols(int n, const std::string& equation, bool bijective,
                           bool up_to_equivalence) {
  json arr = json::array();
  for (const auto& s :
       enumerate_solutions(n, eq_tag_from_name(equation), bijective, up_to_equivalence))
    arr.push_back(to_json(s));
  return arr.dump();
}

std::string splittings(const std::string& group_json) {
  FiniteGroup g = group_from_json(parse(group_json));
  json arr = json::array();
  for (const auto& [a, n] : enumerate_splittings(g)) arr.push_back({{"a", a}, {"n", n}});
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact pentagon-equation solutions and finite Hopf algebras; all values travel "
            "as JSON strings with arbitrary-precision scalars.";
  py::register_exception<pentagon::error>(m, "PentagonError");
  m.def("verify_set", &verify_set, py::arg("solution_json"), py::arg("equation") = "rpe");
  m.def("catalog", &catalog, py::arg("name"));
  m.def("catalog_group_names", &catalog_group_names);
  m.def("coefficient_hopf", &coefficient_hopf, py::arg("solution_json"),
        py::arg("side") = "right");
  m.def("hopf_check", &hopf_check, py::arg("hopf_json"));
  m.def("phi_set_theoretic", &phi_set_theoretic, py::arg("hopf_json"), py::arg("basis_json"));
  m.def("fourier_basis", &fourier_basis, py::arg("group_json"), py::arg("a"), py::arg("n"));
  m.def("recognize_basis", &recognize, py::arg("group_json"), py::arg("basis_json"));
  m.def("enumerate_solutions", &enumerate_sols, py::arg("n"), py::arg("equation") = "rpe",
        py::arg("bijective") = true, py::arg("up_to_equivalence") = false);
  m.def("enumerate_splittings", &splittings, py::arg("group_json"));
}
