#include "doctest.h"
#include "pentagon/catalog.hpp"
#include "pentagon/classifier.hpp"
#include "pentagon/coefficient.hpp"

using namespace pentagon;

namespace {

Mat scaled_basis(const Mat& p, const Cyc& lambda) {
  Mat q = p;
  for (auto& [ij, v] : q.a) v = v * lambda;
  return q;
}

}  // namespace

TEST_CASE("exhaustive enumeration") {
  CHECK(enumerate_solutions(1, eq_tag::rpe).size() == 1);
  // counts frozen after the first exhaustive computation
  auto n2 = enumerate_solutions(2, eq_tag::rpe);
  CHECK(n2.size() == 5);
  CHECK(enumerate_solutions(2, eq_tag::rpe, true, true).size() == 3);
  CHECK(enumerate_solutions(2, eq_tag::pe).size() == 5);
  CHECK(enumerate_solutions(2, eq_tag::rpe, false).size() == 24);
  for (const auto& s : n2) (void)left_group_analysis(s);  // no StructureViolation
  CHECK_THROWS_AS((void)enumerate_solutions(4, eq_tag::rpe), error);
}

TEST_CASE("splitting enumeration") {
  SUBCASE("Z2") {
    auto sp = enumerate_splittings(catalog_group("Z2"));
    REQUIRE(sp.size() == 2);
    CHECK(sp[0].first == std::vector<int>{0});
    CHECK(sp[0].second == std::vector<int>{0, 1});
    CHECK(sp[1].first == std::vector<int>{0, 1});
    CHECK(sp[1].second == std::vector<int>{0});
  }
  SUBCASE("S3 has the trivial splitting plus three reflections") {
    auto sp = enumerate_splittings(catalog_group("S3"));
    CHECK(sp.size() == 4);
    int with_rotations = 0;
    for (const auto& [a, n] : sp)
      if (a == std::vector<int>{0, 1, 2}) ++with_rotations;
    CHECK(with_rotations == 3);
  }
  SUBCASE("Z4: the order-2 subgroup has no complement") {
    auto sp = enumerate_splittings(catalog_group("Z4"));
    REQUIRE(sp.size() == 2);
    for (const auto& [a, n] : sp) CHECK((a.size() == 1 || a.size() == 4));
  }
}

TEST_CASE("phi basis enumeration") {
  SUBCASE("Z2 yields the standard and Fourier bases") {
    auto entries = enumerate_phi_bases(catalog_group("Z2"));
    REQUIRE(entries.size() == 2);
    // trivial A: standard basis, solution = group solution
    CHECK(equivalence(entries[0].solution, group_solution(catalog_group("Z2"))).has_value());
    // full A: Fourier basis, solution = dual solution
    CHECK(equivalence(entries[1].solution, dual_group_solution(catalog_group("Z2"))).has_value());
    // standard and Fourier solutions are inequivalent
    CHECK_FALSE(equivalence(entries[0].solution, entries[1].solution).has_value());
  }
  SUBCASE("Z3 likewise") {
    auto entries = enumerate_phi_bases(catalog_group("Z3"));
    REQUIRE(entries.size() == 2);
    CHECK_FALSE(equivalence(entries[0].solution, entries[1].solution).has_value());
  }
  SUBCASE("S3: the group-solution basis is inequivalent to the split ones") {
    auto entries = enumerate_phi_bases(catalog_group("S3"));
    REQUIRE(entries.size() == 4);
    for (size_t i = 0; i < entries.size(); ++i)
      for (size_t j = i + 1; j < entries.size(); ++j) {
        bool eq = equivalence(entries[i].solution, entries[j].solution).has_value();
        if (entries[i].a_elements.size() != entries[j].a_elements.size()) CHECK_FALSE(eq);
      }
  }
}

TEST_CASE("recognition") {
  SUBCASE("scaled Fourier basis of k[Z2]") {
    FiniteGroup z2 = catalog_group("Z2");
    auto entries = enumerate_phi_bases(z2);
    const auto& fourier = entries[1];
    Mat scaled = scaled_basis(fourier.basis, Cyc(Rational(3), fourier.basis.m));
    auto r = recognize_basis(z2, scaled);
    REQUIRE(std::holds_alternative<RecognizedBasis>(r));
    const auto& rb = std::get<RecognizedBasis>(r);
    CHECK(rb.a_elements == std::vector<int>{0, 1});
    CHECK(rb.n_elements == std::vector<int>{0});
    CHECK(rb.lambda == Cyc(Rational(3), scaled.m));
  }
  SUBCASE("k[S3] with the Z3-splitting basis") {
    FiniteGroup s3 = catalog_group("S3");
    FourierBasis fb = fourier_basis_of_group_algebra(s3, {0, 1, 2}, {0, 3});
    auto r = recognize_basis(s3, fb.basis);
    REQUIRE(std::holds_alternative<RecognizedBasis>(r));
    const auto& rb = std::get<RecognizedBasis>(r);
    CHECK(rb.a_elements == std::vector<int>{0, 1, 2});
    CHECK(rb.n_elements == std::vector<int>{0, 3});
    CHECK(rb.lambda == Cyc::one(fb.basis.m));
    CHECK(rb.solution == fb.solution);
  }
  SUBCASE("negative control {1, 1+a}") {
    Mat p(2, 2, 1);
    p.set(0, 0, Cyc(Rational(1)));
    p.set(0, 1, Cyc(Rational(1)));
    p.set(1, 1, Cyc(Rational(1)));
    auto r = recognize_basis(catalog_group("Z2"), p);
    REQUIRE(std::holds_alternative<RecognitionFailure>(r));
    const auto& f = std::get<RecognitionFailure>(r);
    CHECK(f.stage == "not set-theoretic");
    CHECK(f.witness.find("b1") != std::string::npos);
  }
  SUBCASE("round trip over a sample of groups and scalars") {
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3"}) {
      FiniteGroup g = catalog_group(name);
      for (const auto& entry : enumerate_phi_bases(g)) {
        for (const Rational& lam : {Rational(1), Rational(3, 2), Rational(-2)}) {
          Mat scaled = scaled_basis(entry.basis, Cyc(lam, entry.basis.m));
          auto r = recognize_basis(g, scaled);
          REQUIRE(std::holds_alternative<RecognizedBasis>(r));
          const auto& rb = std::get<RecognizedBasis>(r);
          CHECK(rb.a_elements == entry.a_elements);
          CHECK(rb.n_elements == entry.n_elements);
          CHECK(rb.lambda == Cyc(lam, scaled.m));
        }
      }
    }
  }
  SUBCASE("the D4 splitting whose complement avoids lexicographic reps") {
    // A = {e, r^2, f, r^2 f}, N = {e, r f}: the smallest element of the
    // nontrivial coset is r, which generates no complement; recognition must
    // still recover N from the basis scalars
    FiniteGroup d4 = catalog_group("D4");
    std::vector<int> a{0, 2, 4, 6}, n{0, 5};
    FourierBasis fb = fourier_basis_of_group_algebra(d4, a, n);
    auto r = recognize_basis(d4, fb.basis);
    REQUIRE(std::holds_alternative<RecognizedBasis>(r));
    CHECK(std::get<RecognizedBasis>(r).a_elements == a);
    CHECK(std::get<RecognizedBasis>(r).n_elements == n);
  }
}

TEST_CASE("cocommutative corpus solutions factor through group-algebra bases") {
  // every cocommutative bijective RPE solution with |S| <= 3 is equivalent
  // to phi_B x identity for a Phi-set theoretic basis B of a group algebra
  // of order dim H_r(s)
  for (int n : {1, 2, 3}) {
    for (const auto& s : enumerate_solutions(n, eq_tag::rpe)) {
      if (!check_flags(s).cocommutative) continue;
      int h = build_Hr(s).hopf.d;
      REQUIRE(n % h == 0);
      FiniteSolution idw = FiniteSolution::identity(n / h);
      idw.set_tag(eq_tag::rpe);
      bool found = false;
      for (const auto& name : catalog_group_names()) {
        FiniteGroup g = catalog_group(name);
        if (g.order() != h) continue;
        for (const auto& entry : enumerate_phi_bases(g)) {
          FiniteSolution cand = product(entry.solution, idw);
          FiniteSolution s_rpe = s;
          s_rpe.set_tag(eq_tag::rpe);
          if (equivalence(s_rpe, cand)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("support invariants") {
  SUBCASE("standard basis of k[Z3]") {
    CHECK(support_invariants(catalog_group("Z3"), Mat::identity(3, 1)).all_ok());
  }
  SUBCASE("Fourier bases have full or coset supports and still pass") {
    for (const char* name : {"Z3", "S3"}) {
      FiniteGroup g = catalog_group(name);
      for (const auto& entry : enumerate_phi_bases(g))
        CHECK(support_invariants(g, entry.basis).all_ok());
    }
  }
}
