#include "doctest.h"
#include "pentagon/catalog.hpp"
#include "pentagon/classifier.hpp"
#include "pentagon/group_constructions.hpp"
#include "pentagon/hopf.hpp"

using namespace pentagon;

namespace {

Mat fourier_basis_matrix(const FiniteGroup& a) {
  CharacterTable t = characters(a);
  auto e = fourier_idempotents(a);
  Mat basis(a.order(), a.order(), t.exponent);
  for (int c = 0; c < a.order(); ++c)
    for (int x = 0; x < a.order(); ++x) basis.set(x, c, e[static_cast<size_t>(c)][x]);
  return basis;
}

}  // namespace

TEST_CASE("verify_hopf") {
  FinHopf kz2 = group_algebra(catalog_group("Z2"));
  CHECK(verify_hopf(kz2).all_ok());

  FinHopf broken = kz2;
  broken.antipode = Mat(2, 2, 1);  // zero antipode
  AxiomReport rep = verify_hopf(broken);
  CHECK_FALSE(rep.all_ok());
  CHECK(rep.first_failure().find("antipode") != std::string::npos);

  CHECK(verify_hopf(dual_group_algebra(catalog_group("S3"))).all_ok());
}

TEST_CASE("phi_map") {
  SUBCASE("group algebra: Phi(g (x) h) = g (x) gh") {
    FiniteGroup z3 = catalog_group("Z3");
    LinearSolution f = phi_map(group_algebra(z3));
    for (int g = 0; g < 3; ++g)
      for (int h = 0; h < 3; ++h) {
        auto pos = pure_tensor_position(f.mat.col(g * 3 + h));
        REQUIRE(pos.has_value());
        CHECK(*pos == std::make_pair(g, z3.mul(g, h)));
      }
  }
  SUBCASE("dual group algebra: Phi(d_g (x) d_h) = d_{gh^{-1}} (x) d_h") {
    FiniteGroup s3 = catalog_group("S3");
    LinearSolution f = phi_map(dual_group_algebra(s3));
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) {
        auto pos = pure_tensor_position(f.mat.col(g * 6 + h));
        REQUIRE(pos.has_value());
        CHECK(*pos == std::make_pair(s3.mul(g, s3.inverse(h)), h));
      }
  }
  SUBCASE("tensor Hopf algebra: Phi factorises across the coordinates") {
    FinHopf h = group_algebra(catalog_group("Z2"));
    FinHopf k = dual_group_algebra(catalog_group("Z3"));
    Mat ph = phi_map(h).mat, pk = phi_map(k).mat, pt = phi_map(tensor_hopf(h, k)).mat;
    int dh = 2, dk = 3, d = dh * dk;
    auto slot = [&](int i1, int i2) { return i1 * dk + i2; };
    for (int i1 = 0; i1 < dh; ++i1)
      for (int i2 = 0; i2 < dk; ++i2)
        for (int j1 = 0; j1 < dh; ++j1)
          for (int j2 = 0; j2 < dk; ++j2)
            for (int p1 = 0; p1 < dh; ++p1)
              for (int p2 = 0; p2 < dk; ++p2)
                for (int q1 = 0; q1 < dh; ++q1)
                  for (int q2 = 0; q2 < dk; ++q2) {
                    Cyc lhs = pt.get(slot(p1, p2) * d + slot(q1, q2),
                                     slot(i1, i2) * d + slot(j1, j2));
                    Cyc rhs = ph.get(p1 * dh + q1, i1 * dh + j1).lifted(pt.m) *
                              pk.get(p2 * dk + q2, i2 * dk + j2).lifted(pt.m);
                    CHECK(lhs == rhs);
                  }
  }
}

TEST_CASE("is_phi_set_theoretic") {
  FiniteGroup z2 = catalog_group("Z2");
  FinHopf kz2 = group_algebra(z2);

  SUBCASE("standard basis carries the group solution") {
    auto r = is_phi_set_theoretic(kz2, Mat::identity(2, 1));
    REQUIRE(std::holds_alternative<FiniteSolution>(r));
    CHECK(std::get<FiniteSolution>(r).table() == group_solution(z2).table());
  }
  SUBCASE("Fourier basis carries the dual solution on characters") {
    auto r = is_phi_set_theoretic(kz2.lifted(2), fourier_basis_matrix(z2));
    REQUIRE(std::holds_alternative<FiniteSolution>(r));
    CHECK(std::get<FiniteSolution>(r).table() == dual_group_solution(z2).table());
  }
  SUBCASE("{1, 1+a} fails with the Delta(1+a) witness") {
    Mat p(2, 2, 1);
    p.set(0, 0, Cyc(Rational(1)));
    p.set(0, 1, Cyc(Rational(1)));
    p.set(1, 1, Cyc(Rational(1)));
    auto r = is_phi_set_theoretic(kz2, p);
    REQUIRE(std::holds_alternative<PhiBasisFailure>(r));
    const auto& f = std::get<PhiBasisFailure>(r);
    CHECK(f.b == 1);
    CHECK(f.c == 0);
    // Delta(1+a) = 2 b0 (x) b0 - b0 (x) b1 - b1 (x) b0 + b1 (x) b1
    CHECK(f.coefficients[0] == Cyc(Rational(2)));
    CHECK(f.coefficients[1] == Cyc(Rational(-1)));
    CHECK(f.coefficients[2] == Cyc(Rational(-1)));
    CHECK(f.coefficients[3] == Cyc(Rational(1)));
  }
}

TEST_CASE("positivity") {
  FiniteGroup z2 = catalog_group("Z2");
  FinHopf kz2 = group_algebra(z2);
  SUBCASE("standard basis of a group algebra is positive") {
    PositivityReport rep = positivity_check(kz2, Mat::identity(2, 1));
    CHECK(rep.positive);
    CHECK(rep.nearly_positive);
  }
  SUBCASE("basis {1, -a}") {
    Mat p = Mat::identity(2, 1);
    p.set(1, 1, Cyc(Rational(-1)));
    PositivityReport rep = positivity_check(kz2, p);
    CHECK_FALSE(rep.positive);
    // (-a)(-a) = 1 keeps the multiplication positive; the counit value
    // eps(-a) = -1 and the coproduct constant Delta(-a) = -(-a) (x) (-a)
    // are the negative ones
    CHECK(rep.mult.verdict == positivity::positive);
    CHECK(rep.counit.verdict == positivity::negative);
    CHECK(rep.comult.verdict == positivity::negative);
  }
  SUBCASE("irrational constants are indeterminate, never positive") {
    FiniteGroup z3 = catalog_group("Z3");
    Mat p = Mat::identity(3, 3);
    p.set(1, 1, Cyc::root(3));
    PositivityReport rep = positivity_check(group_algebra(z3).lifted(3), p);
    CHECK_FALSE(rep.positive);
    CHECK(rep.counit.verdict == positivity::indeterminate);
  }
  SUBCASE("standard bases of k[G] and k[G]* are positive for every catalog group") {
    for (const auto& name : catalog_group_names()) {
      FiniteGroup g = catalog_group(name);
      CHECK(positivity_check(group_algebra(g), Mat::identity(g.order(), 1)).positive);
      CHECK(positivity_check(dual_group_algebra(g), Mat::identity(g.order(), 1)).positive);
    }
  }
}

TEST_CASE("dual Hopf algebra") {
  FinHopf h = dual_group_algebra(catalog_group("S3"));
  FinHopf hh = dual_hopf(h);
  FinHopf orig = group_algebra(catalog_group("S3"));
  CHECK(hh.mult == orig.mult);
  CHECK(hh.comult == orig.comult);
  HopfFlags f = hopf_flags(h);
  CHECK(f.commutative);
  CHECK_FALSE(f.cocommutative);
}

TEST_CASE("flags agree with the Phi solution flags") {
  for (const char* name : {"Z2", "Z4", "S3"}) {
    FiniteGroup g = catalog_group(name);
    for (FinHopf h : {group_algebra(g), dual_group_algebra(g)}) {
      HopfFlags hf = hopf_flags(h);
      SolutionFlags lf = linear_flags(phi_map(h));
      CHECK(hf.commutative == lf.commutative);
      CHECK(hf.cocommutative == lf.cocommutative);
    }
  }
  HopfFlags z4 = hopf_flags(group_algebra(catalog_group("Z4")));
  CHECK(z4.commutative);
  CHECK(z4.cocommutative);
}

TEST_CASE("group-likes from a coalgebra basis") {
  SUBCASE("standard basis of k[Z3]") {
    GrouplikeResult r = grouplikes_from_coalgebra_basis(group_algebra(catalog_group("Z3")),
                                                        Mat::identity(3, 1));
    CHECK(r.group.isomorphism_to(catalog_group("Z3")).has_value());
  }
  SUBCASE("Fourier basis of k[Z2] is not a coalgebra basis") {
    FiniteGroup z2 = catalog_group("Z2");
    try {
      (void)grouplikes_from_coalgebra_basis(group_algebra(z2).lifted(2),
                                            fourier_basis_matrix(z2));
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::not_a_coalgebra_basis);
    }
  }
  SUBCASE("scalars cancel: basis {1, 3a} of k[Z2]") {
    Mat p = Mat::identity(2, 1);
    p.set(1, 1, Cyc(Rational(3)));
    GrouplikeResult r = grouplikes_from_coalgebra_basis(group_algebra(catalog_group("Z2")), p);
    CHECK(r.group.order() == 2);
  }
}

TEST_CASE("unit-in-basis consequence") {
  FiniteGroup z2 = catalog_group("Z2");
  CHECK(unit_in_basis_consequence(group_algebra(z2), Mat::identity(2, 1)).group.order() == 2);
  try {
    (void)unit_in_basis_consequence(group_algebra(z2).lifted(2), fourier_basis_matrix(z2));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::unit_not_in_basis);
  }
  CHECK(unit_in_basis_consequence(group_algebra(catalog_group("Z4")), Mat::identity(4, 1))
            .group.isomorphism_to(catalog_group("Z4"))
            .has_value());
}

TEST_CASE("tensor Hopf algebra") {
  FinHopf h = dual_group_algebra(catalog_group("S3"));
  FinHopf t = tensor_hopf(h, trivial_hopf());
  CHECK(t.d == h.d);
  CHECK(t.mult == h.mult);
  CHECK(t.comult == h.comult);

  FinHopf z2z2 = tensor_hopf(group_algebra(catalog_group("Z2")),
                             group_algebra(catalog_group("Z2")));
  FinHopf expect = group_algebra(catalog_group("Z2xZ2"));
  CHECK(z2z2.mult == expect.mult);
  CHECK(z2z2.comult == expect.comult);
  CHECK(z2z2.d == 4);
}

TEST_CASE("solve_antipode recovers the inversion of a group algebra") {
  FiniteGroup s3 = catalog_group("S3");
  FinHopf h = group_algebra(s3);
  Mat want = *h.antipode;
  h.antipode.reset();
  auto s = solve_antipode(h);
  REQUIRE(s.has_value());
  CHECK(*s == want);
}

TEST_CASE("right-monomial identities on Phi-set theoretic bases") {
  FiniteGroup z3 = catalog_group("Z3");
  CHECK(right_monomial_check(group_algebra(z3), Mat::identity(3, 1)).all_ok());
  CHECK(right_monomial_check(group_algebra(z3).lifted(3), fourier_basis_matrix(z3)).all_ok());
  CHECK(right_monomial_check(dual_group_algebra(catalog_group("S3")), Mat::identity(6, 1))
            .all_ok());
}
