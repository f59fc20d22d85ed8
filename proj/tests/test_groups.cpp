#include "doctest.h"
#include "pentagon/catalog.hpp"
#include "pentagon/classifier.hpp"
#include "pentagon/group_constructions.hpp"
#include "pentagon/json_io.hpp"

using namespace pentagon;

namespace {

// inversion action of Z2 on Zn: act[u][a]
std::vector<std::vector<int>> inversion_action(int n) {
  std::vector<std::vector<int>> act(2, std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    act[0][static_cast<size_t>(a)] = a;
    act[1][static_cast<size_t>(a)] = (n - a) % n;
  }
  return act;
}

MatchedPairGroups trivial_pair(const FiniteGroup& b, const FiniteGroup& n) {
  MatchedPairGroups mp{b, n, {}, {}};
  mp.ract.assign(static_cast<size_t>(b.order()), std::vector<int>(static_cast<size_t>(n.order())));
  mp.lact.assign(static_cast<size_t>(b.order()), std::vector<int>(static_cast<size_t>(n.order())));
  for (int x = 0; x < b.order(); ++x)
    for (int u = 0; u < n.order(); ++u) {
      mp.ract[static_cast<size_t>(x)][static_cast<size_t>(u)] = x;
      mp.lact[static_cast<size_t>(x)][static_cast<size_t>(u)] = u;
    }
  return mp;
}

// (Z3, Z2) with <| the inversion and trivial |>
MatchedPairGroups inversion_pair() {
  MatchedPairGroups mp = trivial_pair(catalog_group("Z3"), catalog_group("Z2"));
  for (int x = 0; x < 3; ++x) mp.ract[static_cast<size_t>(x)][1] = (3 - x) % 3;
  return mp;
}

}  // namespace

TEST_CASE("catalog groups validate and have the expected shape") {
  for (const auto& name : catalog_group_names()) {
    FiniteGroup g = catalog_group(name);
    CHECK(g.order() >= 1);
    CHECK(g.order() <= 12);
  }
  CHECK(catalog_group("S3").order() == 6);
  CHECK_FALSE(catalog_group("S3").is_abelian());
  CHECK(catalog_group("Q8").element_order(2) == 4);
  CHECK(catalog_group("A4").order() == 12);
  CHECK_THROWS_AS((void)catalog_group("nope"), error);
}

TEST_CASE("characters") {
  SUBCASE("Z2") {
    CharacterTable t = characters(catalog_group("Z2"));
    CHECK(t.exponent == 2);
    CHECK(t.chi[0] == std::vector<Cyc>{Cyc::one(2), Cyc::one(2)});
    CHECK(t.chi[1] == std::vector<Cyc>{Cyc::one(2), Cyc(Rational(-1), 2)});
  }
  SUBCASE("Z3 via the cyclic character formula") {
    CharacterTable t = characters(catalog_group("Z3"));
    REQUIRE(t.chi.size() == 3);
    // chi_k(g^j) = zeta_3^{k j} for the generator g found by the
    // decomposition; verify against the multiplicative structure directly
    FiniteGroup z3 = catalog_group("Z3");
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 3; ++a) {
        Cyc v = t.chi[static_cast<size_t>(k)][static_cast<size_t>(a)];
        bool is_power = false;
        for (int e = 0; e < 3; ++e) is_power = is_power || v == Cyc::root(3, e);
        CHECK(is_power);
      }
    (void)z3;
  }
  SUBCASE("Z2xZ2 has four +-1 rows") {
    CharacterTable t = characters(catalog_group("Z2xZ2"));
    REQUIRE(t.chi.size() == 4);
    for (const auto& row : t.chi)
      for (const auto& v : row)
        CHECK((v == Cyc::one(t.exponent) || v == Cyc(Rational(-1), t.exponent)));
  }
  SUBCASE("orthogonality for every abelian catalog group") {
    for (const auto& name : catalog_group_names()) {
      FiniteGroup g = catalog_group(name);
      if (!g.is_abelian()) continue;
      CharacterTable t = characters(g);  // construction verifies orthogonality
      CHECK(static_cast<int>(t.chi.size()) == g.order());
    }
  }
  CHECK_THROWS_AS((void)characters(catalog_group("S3")), error);
}

TEST_CASE("fourier idempotents") {
  SUBCASE("Z2 gives (1 +- a)/2") {
    auto e = fourier_idempotents(catalog_group("Z2"));
    REQUIRE(e.size() == 2);
    CHECK(e[0][0] == Cyc(Rational(1, 2), 2));
    CHECK(e[0][1] == Cyc(Rational(1, 2), 2));
    CHECK(e[1][0] == Cyc(Rational(1, 2), 2));
    CHECK(e[1][1] == Cyc(Rational(-1, 2), 2));
  }
  SUBCASE("Z3 trivial idempotent") {
    auto e = fourier_idempotents(catalog_group("Z3"));
    for (int i = 0; i < 3; ++i) CHECK(e[0][i] == Cyc(Rational(1, 3), 3));
  }
  SUBCASE("Phi on the idempotent basis of k[Z3] is the dual solution") {
    FiniteGroup z3 = catalog_group("Z3");
    CharacterTable t = characters(z3);
    auto e = fourier_idempotents(z3);
    Mat basis(3, 3, t.exponent);
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a) basis.set(a, c, e[static_cast<size_t>(c)][a]);
    FinHopf kz3 = group_algebra(z3).lifted(t.exponent);
    auto r = is_phi_set_theoretic(kz3, basis);
    REQUIRE(std::holds_alternative<FiniteSolution>(r));
    const auto& sol = std::get<FiniteSolution>(r);
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2)
        CHECK(sol.apply(c1, c2) ==
              std::make_pair(t.char_mul(c1, t.char_inv(c2)), c2));
  }
}

TEST_CASE("Theta is a Hopf isomorphism onto the dual of the dual group") {
  // the Fourier basis {e_chi} of k[A] carries exactly the structure
  // constants of k[A^dual]^* under the character indexing
  for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "Z6"}) {
    FiniteGroup a = catalog_group(name);
    CharacterTable t = characters(a);
    auto e = fourier_idempotents(a);
    int n = a.order();
    Mat basis(n, n, t.exponent);
    for (int c = 0; c < n; ++c)
      for (int x = 0; x < n; ++x) basis.set(x, c, e[static_cast<size_t>(c)][x]);
    FinHopf transported = change_basis(group_algebra(a).lifted(t.exponent), basis);
    FiniteGroup dual_grp(n, t.dual_cayley);
    FinHopf expected = dual_group_algebra(dual_grp).lifted(t.exponent);
    CHECK(transported.mult == expected.mult);
    CHECK(transported.comult == expected.comult);
    CHECK(transported.unit == expected.unit);
    CHECK(transported.counit == expected.counit);
    REQUIRE(transported.antipode.has_value());
    CHECK(*transported.antipode == *expected.antipode);
  }
}

TEST_CASE("matched pair validation") {
  CHECK(validate_matched_pair(trivial_pair(catalog_group("Z2"), catalog_group("Z3"))).ok);
  CHECK(validate_matched_pair(inversion_pair()).ok);
  // corrupted <| table
  MatchedPairGroups bad = inversion_pair();
  bad.ract[1][1] = 1;
  MatchedPairCheck chk = validate_matched_pair(bad);
  CHECK_FALSE(chk.ok);
  CHECK_FALSE(chk.witness.empty());
}

TEST_CASE("bicrossed product Hopf algebra") {
  SUBCASE("trivial actions give the tensor product") {
    MatchedPairGroups mp = trivial_pair(catalog_group("Z2"), catalog_group("Z2"));
    FinHopf h = bicrossed_hopf(mp);
    CHECK(h.d == 4);
    FinHopf expect =
        tensor_hopf(dual_group_algebra(catalog_group("Z2")), group_algebra(catalog_group("Z2")));
    CHECK(h.mult == expect.mult);
    CHECK(h.comult == expect.comult);
    CHECK(h.unit == expect.unit);
    CHECK(h.counit == expect.counit);
  }
  SUBCASE("Z3 <| Z2 by inversion") {
    FinHopf h = bicrossed_hopf(inversion_pair());
    CHECK(h.d == 6);
    HopfFlags f = hopf_flags(h);
    CHECK_FALSE(f.commutative);
    PositivityReport pr = positivity_check(h, Mat::identity(6, 1));
    CHECK(pr.positive);
  }
}

TEST_CASE("bicrossed set solution") {
  SUBCASE("trivial actions collapse to ((s t^{-1}, u), (t, u v))") {
    FiniteGroup z2 = catalog_group("Z2");
    MatchedPairGroups mp = trivial_pair(z2, z2);
    FiniteSolution sol = bicrossed_set_solution(mp);
    auto idx = [](int s, int u) { return s * 2 + u; };
    for (int s = 0; s < 2; ++s)
      for (int u = 0; u < 2; ++u)
        for (int t = 0; t < 2; ++t)
          for (int v = 0; v < 2; ++v)
            CHECK(sol.apply(idx(s, u), idx(t, v)) ==
                  std::make_pair(idx(z2.mul(s, z2.inverse(t)), u), idx(t, z2.mul(u, v))));
  }
  SUBCASE("inversion pair verifies against the Hopf restriction") {
    // equality with the Phi restriction is asserted inside the builder
    FiniteSolution sol = bicrossed_set_solution(inversion_pair());
    CHECK(sol.size() == 6);
    CHECK(verify_equation(sol, eq_tag::rpe));
  }
  SUBCASE("cocommutative iff B abelian and |> trivial, |B|,|N| <= 3") {
    for (const char* bn : {"Z1", "Z2", "Z3"})
      for (const char* nn : {"Z1", "Z2", "Z3"}) {
        FiniteGroup b = catalog_group(bn), n = catalog_group(nn);
        for (const auto& mp : enumerate_matched_pairs(b, n)) {
          bool lact_trivial = true;
          for (int x = 0; x < b.order(); ++x)
            for (int u = 0; u < n.order(); ++u)
              lact_trivial = lact_trivial &&
                             mp.lact[static_cast<size_t>(x)][static_cast<size_t>(u)] == u;
          bool expect = b.is_abelian() && lact_trivial;
          CHECK(check_flags(bicrossed_set_solution(mp)).cocommutative == expect);
        }
      }
  }
}

TEST_CASE("semidirect products") {
  FiniteGroup z3 = catalog_group("Z3"), z2 = catalog_group("Z2");
  SUBCASE("trivial action is the direct product") {
    std::vector<std::vector<int>> triv(2, std::vector<int>{0, 1, 2});
    Semidirect sd = semidirect(z3, z2, triv);
    CHECK(sd.group.isomorphism_to(catalog_group("Z6")).has_value());
  }
  SUBCASE("Z3 x| Z2 by inversion is S3") {
    Semidirect sd = semidirect(z3, z2, inversion_action(3));
    CHECK(sd.group.isomorphism_to(catalog_group("S3")).has_value());
  }
  SUBCASE("Z4 x| Z2 by inversion is D4") {
    Semidirect sd = semidirect(catalog_group("Z4"), z2, inversion_action(4));
    CHECK(sd.group.isomorphism_to(catalog_group("D4")).has_value());
  }
  SUBCASE("a non-action is rejected") {
    std::vector<std::vector<int>> bad(2, std::vector<int>{0, 1, 2});
    bad[1] = {0, 0, 0};
    CHECK_THROWS_AS((void)semidirect(z3, z2, bad), error);
  }
}

TEST_CASE("fourier basis of a group algebra") {
  SUBCASE("G = Z2 with A = Z2, N = 1") {
    FiniteGroup z2 = catalog_group("Z2");
    FourierBasis fb = fourier_basis_of_group_algebra(z2, {0, 1}, {0});
    CHECK(fb.solution.size() == 2);
    // (alpha, beta) -> (alpha beta^{-1}, beta) on characters
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        CHECK(fb.solution.apply(a, b) ==
              std::make_pair(fb.chars.char_mul(a, fb.chars.char_inv(b)), b));
  }
  SUBCASE("G = S3 with the Z3 splitting") {
    FiniteGroup s3 = catalog_group("S3");
    // rotations {0,1,2}, one reflection subgroup {0,3}
    FourierBasis fb = fourier_basis_of_group_algebra(s3, {0, 1, 2}, {0, 3});
    CHECK(fb.solution.size() == 6);
    CHECK(fb.basis.m == 3);  // values in Q(zeta_3)
    CHECK(verify_equation(fb.solution, eq_tag::rpe));
  }
  SUBCASE("G = Z4 with A = G") {
    FourierBasis fb = fourier_basis_of_group_algebra(catalog_group("Z4"), {0, 1, 2, 3}, {0});
    CHECK(fb.basis.m == 4);
    CHECK(fb.solution.size() == 4);
  }
  SUBCASE("a non-normal A is rejected") {
    CHECK_THROWS_AS(
        (void)fourier_basis_of_group_algebra(catalog_group("S3"), {0, 3}, {0, 1, 2}), error);
  }
}

TEST_CASE("fourier basis agrees with the matched pair (A^dual, N)") {
  // the Fourier-basis solution equals the bicrossed solution of the matched
  // pair on (A^dual, N) with trivial left action, under the (chi, u) labels
  FiniteGroup s3 = catalog_group("S3");
  FourierBasis fb = fourier_basis_of_group_algebra(s3, {0, 1, 2}, {0, 3});
  int na = 3, nn = 2;
  FiniteGroup dual_grp(na, fb.chars.dual_cayley);
  FiniteGroup n_grp = s3.restricted_to({0, 3});
  MatchedPairGroups mp{dual_grp, n_grp, {}, {}};
  mp.ract.assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(nn)));
  mp.lact.assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(nn)));
  std::vector<int> n_elements{0, 3};
  for (int c = 0; c < na; ++c)
    for (int ui = 0; ui < nn; ++ui) {
      // chi <| u = u^{-1} . chi, located by value matching
      int u_inv = s3.inverse(n_elements[static_cast<size_t>(ui)]);
      std::vector<Cyc> values(static_cast<size_t>(na));
      for (int x = 0; x < na; ++x) {
        int conj = s3.mul(s3.mul(s3.inverse(u_inv), x), u_inv);
        values[static_cast<size_t>(x)] = fb.chars.chi[static_cast<size_t>(c)][static_cast<size_t>(conj)];
      }
      mp.ract[static_cast<size_t>(c)][static_cast<size_t>(ui)] = fb.chars.index_of_values(values);
      mp.lact[static_cast<size_t>(c)][static_cast<size_t>(ui)] = ui;
    }
  REQUIRE(validate_matched_pair(mp).ok);
  FiniteSolution from_pair = bicrossed_set_solution(mp);
  CHECK(from_pair.table() == fb.solution.table());
}

TEST_CASE("bicharacter transport") {
  SUBCASE("Z2 with the sign pairing") {
    FiniteGroup z2 = catalog_group("Z2"), z1 = catalog_group("Z1");
    std::vector<std::vector<Cyc>> pairing(2, std::vector<Cyc>(2, Cyc::one(2)));
    pairing[1][1] = Cyc(Rational(-1), 2);
    std::vector<std::vector<int>> act(1, std::vector<int>{0, 1});
    auto sol = bicharacter_transport(z2, z1, act, pairing);
    REQUIRE(sol.has_value());
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        CHECK(sol->apply(a, b) == std::make_pair((a - b + 2) % 2, b));
  }
  SUBCASE("Z3 with N = Z2 inversion and zeta_3^{ab}") {
    FiniteGroup z3 = catalog_group("Z3"), z2 = catalog_group("Z2");
    std::vector<std::vector<Cyc>> pairing(3, std::vector<Cyc>(3, Cyc::one(3)));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) pairing[static_cast<size_t>(a)][static_cast<size_t>(b)] = Cyc::root(3, a * b);
    auto sol = bicharacter_transport(z3, z2, inversion_action(3), pairing);
    REQUIRE(sol.has_value());  // <-a, b> = <a, -b> holds
    CHECK(verify_equation(*sol, eq_tag::rpe));
  }
  SUBCASE("degenerate pairing is rejected") {
    FiniteGroup z2 = catalog_group("Z2"), z1 = catalog_group("Z1");
    std::vector<std::vector<Cyc>> pairing(2, std::vector<Cyc>(2, Cyc::one(2)));
    std::vector<std::vector<int>> act(1, std::vector<int>{0, 1});
    CHECK_THROWS_AS((void)bicharacter_transport(z2, z1, act, pairing), error);
  }
}

TEST_CASE("matched-pair datum of RPE solutions") {
  FinHopf h = group_algebra(catalog_group("Z2"));
  FinHopf k = group_algebra(catalog_group("Z2"));
  // flip interfaces: the trivial matched pair of Hopf algebras
  Mat flip_kh(4, 4, 1), flip_hk(4, 4, 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      flip_kh.set(b * 2 + a, a * 2 + b, Cyc::one(1));  // K (x) H -> H (x) K
      flip_hk.set(b * 2 + a, a * 2 + b, Cyc::one(1));  // H (x) K -> K (x) H
    }
  SUBCASE("flip interfaces reproduce the tensor-product solution") {
    MpdReport rep = mpd_verify_and_build(h, k, flip_kh, flip_hk);
    CHECK(rep.mult_pentagon.typechecks);
    CHECK(rep.mult_pentagon.holds);
    CHECK_FALSE(rep.cop_pentagon.typechecks);
    CHECK_FALSE(rep.action_coaction.typechecks);
    CHECK(rep.rpe);
    CHECK(rep.phi.mat == phi_map(tensor_hopf(h, k)).mat);
  }
  SUBCASE("zero interfaces") {
    Mat zero_kh(4, 4, 1), zero_hk(4, 4, 1);
    MpdReport rep = mpd_verify_and_build(h, k, zero_kh, zero_hk);
    // the printed first equation degenerates to 0 = 0; the other two do not
    // typecheck as printed, which the report carries verbatim
    CHECK(rep.mult_pentagon.typechecks);
    CHECK(rep.mult_pentagon.holds);
    CHECK_FALSE(rep.cop_pentagon.typechecks);
    CHECK_FALSE(rep.cop_pentagon.detail.empty());
    CHECK_FALSE(rep.action_coaction.typechecks);
    CHECK(rep.phi.mat.a.empty());  // Phi_bowtie = 0
  }
}
