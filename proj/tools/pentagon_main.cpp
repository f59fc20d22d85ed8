#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pentagon/catalog.hpp"
#include "pentagon/classifier.hpp"
#include "pentagon/coefficient.hpp"
#include "pentagon/json_io.hpp"
#include "pentagon/report.hpp"

namespace {

using namespace pentagon;

bool opt_json = false;
long opt_conductor = 0;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(errc::bad_input, "cannot write " + path);
  out << j.dump(2) << "\n";
}

bool looks_like_file(const std::string& arg) {
  if (arg.find(".json") != std::string::npos) return true;
  std::ifstream probe(arg);
  return probe.good();
}

FiniteSolution load_solution(const std::string& arg) {
  if (looks_like_file(arg)) return solution_from_json(read_json_file(arg));
  return catalog_solution(arg);
}

FiniteGroup load_group(const std::string& arg) {
  if (looks_like_file(arg)) return group_from_json(read_json_file(arg));
  return catalog_group(arg);
}

long lifted_conductor(long m) {
  if (opt_conductor == 0) return m;
  if (opt_conductor % m != 0)
    fail(errc::bad_input, "--conductor must be a multiple of the computed conductor " +
                              std::to_string(m));
  return opt_conductor;
}

FinHopf load_hopf(const std::string& arg) {
  std::string name = arg.rfind("hopf:", 0) == 0 ? arg.substr(5) : arg;
  FinHopf h = looks_like_file(arg) ? hopf_from_json(read_json_file(arg)) : catalog_hopf(name);
  long m = lifted_conductor(h.m);
  return m == h.m ? h : h.lifted(m);
}

Mat load_mat(const std::string& arg) {
  Mat p = mat_from_json(read_json_file(arg));
  long m = lifted_conductor(p.m);
  return m == p.m ? p : p.lifted(m);
}

int finish(RunReport& rep, std::chrono::steady_clock::time_point t0) {
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (opt_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.render_text();
  return rep.all_ok() ? 0 : 1;
}

std::vector<int> parse_indices(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  std::sort(out.begin(), out.end());
  return out;
}

std::string flags_str(const SolutionFlags& f) {
  std::ostringstream os;
  os << "commutative=" << (f.commutative ? "true" : "false")
     << " cocommutative=" << (f.cocommutative ? "true" : "false");
  return os.str();
}

int cmd_verify_set(const std::string& input, const std::string& equation, bool with_flags) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "verify-set " + input + " " + equation;
  FiniteSolution s = load_solution(input);
  eq_tag eq = eq_tag_from_name(equation);
  rep.value("n", std::to_string(s.size()));
  rep.add("equation " + equation, verify_equation(s, eq));
  if (with_flags) rep.value("flags", flags_str(check_flags(s)));
  return finish(rep, t0);
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& input,
                const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "convert " + from + " -> " + to;
  if (from != "set") fail(errc::bad_input, "convert: only --from set is supported");
  FiniteSolution s = load_solution(input);
  json payload;
  if (to == "linear") {
    LinearSolution f = linearise(s);
    rep.add("linearisation preserves the equation",
            s.tag() == eq_tag::none || verify_linear(f, s.tag()));
    payload = json{{"d", f.d}, {"equation", eq_tag_name(f.tag)}, {"mat", to_json(f.mat)}};
  } else if (to == "pullback") {
    LinearSolution f = pullback(s);
    rep.add("pullback swaps the equation",
            f.tag == eq_tag::none || verify_linear(f, f.tag));
    payload = json{{"d", f.d}, {"equation", eq_tag_name(f.tag)}, {"mat", to_json(f.mat)}};
  } else if (to == "algebra") {
    AlgebraSolution alg = to_algebra_element(linearise(s));
    rep.add("algebra element satisfies the equation",
            s.tag() == eq_tag::none || verify_algebra_equation(alg, s.tag()));
    json nz = json::array();
    for (const auto& [k, v] : alg.r)
      nz.push_back(json::array({k[0], k[1], k[2], k[3], to_json(v)}));
    payload = json{{"d", alg.d}, {"m", alg.m}, {"equation", eq_tag_name(alg.tag)}, {"nz", nz}};
  } else {
    fail(errc::bad_input, "convert: --to must be linear, pullback or algebra");
  }
  if (!out.empty()) write_json_file(out, payload);
  rep.value("terms", std::to_string(payload.contains("nz") ? payload["nz"].size()
                                                           : payload["mat"]["nz"].size()));
  return finish(rep, t0);
}

int cmd_coeff(const std::string& input, const std::string& side, const std::string& out,
              const std::string& checks) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "coeff " + input + " --side " + side;
  FiniteSolution s = load_solution(input);
  CoefficientAlgebra ca = side == "left" ? build_Hl(s) : build_Hr(s);
  rep.value("dim", std::to_string(ca.hopf.d));
  {
    bool zero_one = true;
    for (const auto& [k, v] : ca.hopf.mult.a)
      if (!(v == Cyc::one(1))) zero_one = false;
    for (const auto& [k, v] : ca.hopf.comult.a)
      if (!(v == Cyc::one(1))) zero_one = false;
    rep.value("constants", zero_one ? "{0,1}" : "general");
  }
  std::stringstream ss(checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "hopf") {
      AxiomReport ar = verify_hopf(ca.hopf);
      rep.add("hopf axioms", ar.all_ok(), ar.first_failure());
    } else if (item == "positive") {
      PositivityReport pr = positivity_check(ca.hopf, Mat::identity(ca.hopf.d, ca.hopf.m));
      rep.add("positive basis", pr.positive,
              pr.positive ? "" : "see nearly_positive=" + std::to_string(pr.nearly_positive));
    } else if (item == "settheoretic") {
      auto r = is_phi_set_theoretic(ca.hopf, Mat::identity(ca.hopf.d, ca.hopf.m));
      bool ok = std::holds_alternative<FiniteSolution>(r);
      std::string detail;
      if (ok) {
        ok = std::get<FiniteSolution>(r) == canonical_phi_table(ca.analysis, ca.basis);
        detail = ok ? "" : "table differs from the symbolic form";
      } else {
        const auto& f = std::get<PhiBasisFailure>(r);
        detail = "witness pair (" + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
      }
      rep.add("phi-set theoretic canonical basis", ok, detail);
    } else if (item == "crosscheck") {
      rep.add("coproduct conjugation vs closed form", comult_crosscheck(s));
    } else if (!item.empty()) {
      fail(errc::bad_input, "unknown check: " + item);
    }
  }
  if (!out.empty()) write_json_file(out, to_json(ca.hopf));
  return finish(rep, t0);
}

int cmd_hopf_check(const std::string& input) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "hopf-check " + input;
  FinHopf h = load_hopf(input);
  rep.value("dim", std::to_string(h.d));
  rep.value("conductor", std::to_string(h.m));
  AxiomReport ar = verify_hopf(h);
  for (const auto& item : ar.items) rep.add(item.name, item.ok, item.witness);
  if (ar.all_ok()) {
    HopfFlags f = hopf_flags(h);
    rep.value("commutative", f.commutative ? "true" : "false");
    rep.value("cocommutative", f.cocommutative ? "true" : "false");
  }
  return finish(rep, t0);
}

int cmd_phi_basis(const std::string& hopf_arg, const std::string& basis_arg) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "phi-basis " + hopf_arg + " " + basis_arg;
  FinHopf h = load_hopf(hopf_arg);
  Mat p = load_mat(basis_arg);
  if (p.m != h.m) {
    long m = std::lcm(p.m, h.m);
    p = p.lifted(m);
    h = h.lifted(m);
  }
  auto r = is_phi_set_theoretic(h, p);
  if (std::holds_alternative<FiniteSolution>(r)) {
    rep.add("phi-set theoretic", true);
    const auto& sol = std::get<FiniteSolution>(r);
    rep.value("solution", to_json(sol).dump());
    PositivityReport pr = positivity_check(h, p);
    rep.value("positive", pr.positive ? "true" : "false");
    rep.value("nearly_positive", pr.nearly_positive ? "true" : "false");
  } else {
    const auto& f = std::get<PhiBasisFailure>(r);
    std::string coeffs;
    for (int i = 0; i < f.coefficients.dim; ++i)
      if (!f.coefficients[i].is_zero())
        coeffs += " [" + std::to_string(i) + "]=" + f.coefficients[i].str();
    rep.add("phi-set theoretic", false,
            "witness pair (" + std::to_string(f.b) + "," + std::to_string(f.c) + "):" + coeffs);
  }
  return finish(rep, t0);
}

int cmd_group_solution(const std::string& group, const std::string& kind, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "group-solution " + group + " --kind " + kind;
  FiniteGroup g = load_group(group);
  FiniteSolution s = kind == "dual"  ? dual_group_solution(g)
                     : kind == "pe"  ? pe_group_solution(g)
                                     : group_solution(g);
  rep.add("satisfies " + std::string(eq_tag_name(s.tag())), verify_equation(s, s.tag()));
  rep.value("flags", flags_str(check_flags(s)));
  if (!out.empty()) write_json_file(out, to_json(s));
  return finish(rep, t0);
}

int cmd_fourier_basis(const std::string& group, const std::string& a_csv, const std::string& n_csv,
                      bool all, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "fourier-basis " + group;
  FiniteGroup g = load_group(group);
  json payload = json::array();
  if (all) {
    auto entries = enumerate_phi_bases(g);
    rep.value("splittings", std::to_string(entries.size()));
    for (const auto& e : entries) {
      rep.add("splitting A=" + std::to_string(e.a_elements.size()) +
                  " N=" + std::to_string(e.n_elements.size()),
              true);
      payload.push_back(json{{"a", e.a_elements},
                             {"n", e.n_elements},
                             {"basis", to_json(e.basis)},
                             {"solution", to_json(e.solution)}});
    }
  } else {
    FourierBasis fb = fourier_basis_of_group_algebra(g, parse_indices(a_csv), parse_indices(n_csv));
    rep.add("phi-set theoretic with the dual-action table", true);
    payload = json{{"basis", to_json(fb.basis)}, {"solution", to_json(fb.solution)}};
  }
  if (!out.empty()) write_json_file(out, payload);
  return finish(rep, t0);
}

int cmd_matched_pair(const std::string& input, const std::string& solution_out,
                     const std::string& hopf_out) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "matched-pair " + input;
  MatchedPairGroups mp = matched_pair_from_json(read_json_file(input));
  MatchedPairCheck chk = validate_matched_pair(mp);
  rep.add("matched pair axioms", chk.ok, chk.witness);
  if (chk.ok) {
    FinHopf h = bicrossed_hopf(mp);
    rep.value("dim", std::to_string(h.d));
    HopfFlags f = hopf_flags(h);
    rep.value("commutative", f.commutative ? "true" : "false");
    rep.value("cocommutative", f.cocommutative ? "true" : "false");
    FiniteSolution sol = bicrossed_set_solution(mp);
    rep.add("bicrossed solution matches the Phi restriction", true);
    if (!solution_out.empty()) write_json_file(solution_out, to_json(sol));
    if (!hopf_out.empty()) write_json_file(hopf_out, to_json(h));
  }
  return finish(rep, t0);
}

int cmd_enumerate(int size, const std::string& equation, bool bijective, bool up_to_equiv,
                  const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "enumerate n=" + std::to_string(size) + " " + equation;
  auto sols = enumerate_solutions(size, eq_tag_from_name(equation), bijective, up_to_equiv);
  rep.value("count", std::to_string(sols.size()));
  if (!out.empty()) {
    json arr = json::array();
    for (const auto& s : sols) arr.push_back(to_json(s));
    write_json_file(out, arr);
  }
  return finish(rep, t0);
}

int cmd_recognize(const std::string& group, const std::string& basis_arg) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "recognize-basis " + group + " " + basis_arg;
  FiniteGroup g = load_group(group);
  Mat p = load_mat(basis_arg);
  auto r = recognize_basis(g, p);
  if (std::holds_alternative<RecognizedBasis>(r)) {
    const auto& rb = std::get<RecognizedBasis>(r);
    rep.add("recognized", true);
    json a = rb.a_elements, n = rb.n_elements;
    rep.value("A", a.dump());
    rep.value("N", n.dump());
    rep.value("lambda", rb.lambda.str());
  } else {
    const auto& f = std::get<RecognitionFailure>(r);
    rep.add("recognized", false, "stage '" + f.stage + "': " + f.witness);
  }
  return finish(rep, t0);
}

int cmd_catalog(const std::string& name, const std::string& out, bool list) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "catalog";
  if (list) {
    for (const auto& n : catalog_group_names()) rep.value(n, "group");
    return finish(rep, t0);
  }
  json payload;
  if (name.rfind("hopf:", 0) == 0) {
    payload = to_json(catalog_hopf(name.substr(5)));
    rep.value("kind", "hopf");
  } else if (name.find(':') != std::string::npos) {
    payload = to_json(catalog_solution(name));
    rep.value("kind", "solution");
  } else {
    payload = to_json(catalog_group(name));
    rep.value("kind", "group");
  }
  rep.add("validated", true);
  if (!out.empty())
    write_json_file(out, payload);
  else
    rep.value("object", payload.dump());
  return finish(rep, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pentagon: exact set-theoretic pentagon-equation solutions and the finite"
               " Hopf algebras they generate"};
  app.require_subcommand(1);
  app.add_flag("--json", opt_json, "emit the report as JSON");
  app.add_option("--conductor", opt_conductor,
                 "override the global conductor (must be a multiple of the computed one)");

  std::string input, equation = "rpe", from = "set", to = "algebra", side = "right", out, checks;
  std::string group, basis, kind = "group", a_csv, n_csv, name, sol_out, hopf_out;
  bool with_flags = false, all = false, bijective = true, up_to_equiv = false, list = false;
  int size = 2;

  auto* verify = app.add_subcommand("verify-set", "check a set solution against RPE or PE");
  verify->add_option("--input", input)->required();
  verify->add_option("--equation", equation);
  verify->add_flag("--flags", with_flags, "also report (co)commutativity");

  auto* convert = app.add_subcommand("convert", "set solution to linear / pullback / algebra form");
  convert->add_option("--from", from);
  convert->add_option("--to", to);
  convert->add_option("--input", input)->required();
  convert->add_option("--out", out);

  auto* coeff = app.add_subcommand("coeff", "coefficient Hopf algebra of a bijective RPE solution");
  coeff->add_option("--input", input)->required();
  coeff->add_option("--side", side);
  coeff->add_option("--out", out);
  coeff->add_option("--check", checks, "comma list: positive,settheoretic,hopf,crosscheck");

  auto* hc = app.add_subcommand("hopf-check", "verify the (Hopf) bialgebra axioms");
  hc->add_option("--input", input)->required();

  auto* pb = app.add_subcommand("phi-basis", "test a candidate Phi-set theoretic basis");
  pb->add_option("--hopf", group)->required();
  pb->add_option("--basis", basis)->required();

  auto* gs = app.add_subcommand("group-solution", "group / dual / PE solution of a group");
  gs->add_option("--group", group)->required();
  gs->add_option("--kind", kind, "group | dual | pe");
  gs->add_option("--out", out);

  auto* fb = app.add_subcommand("fourier-basis", "Fourier basis of k[G] for a splitting A x| N");
  fb->add_option("--group", group)->required();
  fb->add_option("--a", a_csv, "A as comma-separated indices");
  fb->add_option("--n", n_csv, "N as comma-separated indices");
  fb->add_flag("--all", all, "every splitting");
  fb->add_option("--out", out);

  auto* mp = app.add_subcommand("matched-pair", "validate a matched pair, build the bicrossed"
                                                " product and its solution");
  mp->add_option("--input", input)->required();
  mp->add_option("--solution", sol_out);
  mp->add_option("--hopf", hopf_out);

  auto* en = app.add_subcommand("enumerate", "exhaustive solution scan");
  en->add_option("--size", size)->required();
  en->add_option("--equation", equation);
  en->add_flag("--bijective,!--no-bijective", bijective);
  en->add_flag("--up-to-equivalence", up_to_equiv);
  en->add_option("--out", out);

  auto* rec = app.add_subcommand("recognize-basis", "run the classification pipeline on a basis");
  rec->add_option("--group", group)->required();
  rec->add_option("--basis", basis)->required();

  auto* cat = app.add_subcommand("catalog", "bundled groups, solutions and Hopf algebras");
  cat->add_option("--name", name);
  cat->add_option("--out", out);
  cat->add_flag("--list", list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 2 on usage errors, 0 for --help
  }

  try {
    if (verify->parsed()) return cmd_verify_set(input, equation, with_flags);
    if (convert->parsed()) return cmd_convert(from, to, input, out);
    if (coeff->parsed()) return cmd_coeff(input, side, out, checks);
    if (hc->parsed()) return cmd_hopf_check(input);
    if (pb->parsed()) return cmd_phi_basis(group, basis);
    if (gs->parsed()) return cmd_group_solution(group, kind, out);
    if (fb->parsed()) return cmd_fourier_basis(group, a_csv, n_csv, all, out);
    if (mp->parsed()) return cmd_matched_pair(input, sol_out, hopf_out);
    if (en->parsed()) return cmd_enumerate(size, equation, bijective, up_to_equiv, out);
    if (rec->parsed()) return cmd_recognize(group, basis);
    if (cat->parsed()) return cmd_catalog(name, out, list);
  } catch (const pentagon::error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what();
    if (!e.witness().empty()) std::cerr << "  witness: " << e.witness();
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand\n";
  return 2;
}
