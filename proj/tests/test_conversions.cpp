#include <random>

#include "doctest.h"
#include "pentagon/catalog.hpp"
#include "pentagon/classifier.hpp"
#include "pentagon/conversions.hpp"

using namespace pentagon;

TEST_CASE("linearise") {
  LinearSolution id = linearise(FiniteSolution::identity(2));
  CHECK(id.mat == Mat::identity(4, 1));

  FiniteGroup z2 = catalog_group("Z2");
  LinearSolution f = linearise(group_solution(z2));
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h) {
      Vec col = f.mat.col(g * 2 + h);
      auto pos = pure_tensor_position(col);
      REQUIRE(pos.has_value());
      CHECK(*pos == std::make_pair(g, z2.mul(g, h)));
    }
}

TEST_CASE("linearisation of a bijection is a permutation matrix") {
  for (const auto& s : enumerate_solutions(2, eq_tag::rpe)) {
    Mat m = linearise(s).mat;
    CHECK(m.a.size() == 4);  // one entry per column of the 4x4 matrix
    for (const auto& [ij, v] : m.a) CHECK(v == Cyc::one(1));
    CHECK(is_invertible(m));
  }
}

TEST_CASE("pullback") {
  FiniteGroup z2 = catalog_group("Z2");
  FiniteSolution s = pe_group_solution(z2);  // (g,h) -> (gh, h)
  LinearSolution f = pullback(s);
  CHECK(f.tag == eq_tag::rpe);  // tags swap
  CHECK(verify_linear(f, eq_tag::rpe));
  // f_s(delta_g (x) delta_h) = delta_{g h^{-1}} (x) delta_h
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h) {
      auto pos = pure_tensor_position(f.mat.col(g * 2 + h));
      REQUIRE(pos.has_value());
      CHECK(*pos == std::make_pair(z2.mul(g, z2.inverse(h)), h));
    }

  CHECK(pullback(FiniteSolution::identity(2)).mat == Mat::identity(4, 1));

  // f_s = (sigma (x) sigma)(s^{-1})^v (sigma^{-1} (x) sigma^{-1}); sigma is
  // the identity on coordinates, so this is matrix equality
  for (const auto& t : enumerate_solutions(2, eq_tag::rpe))
    CHECK(pullback(t).mat == linearise(invert(t)).mat);
}

TEST_CASE("to_algebra_element") {
  {
    LinearSolution f = linearise(FiniteSolution::identity(1));
    AlgebraSolution alg = to_algebra_element(f);
    REQUIRE(alg.r.size() == 1);
    CHECK(alg.r.count({0, 0, 0, 0}) == 1);
  }
  {
    FiniteGroup z2 = catalog_group("Z2");
    AlgebraSolution alg = to_algebra_element(linearise(group_solution(z2)));
    CHECK(alg.r.size() == 4);
    // s^A = sum S_{x,x} (x) S_{xy,y}
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        CHECK(alg.r.count({x, x, z2.mul(x, y), y}) == 1);
  }
  // phi_2(to_algebra_element(f)) = f on random d = 3 matrices
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coin(-2, 2);
  for (int trial = 0; trial < 5; ++trial) {
    LinearSolution f;
    f.d = 3;
    f.mat = Mat(9, 9, 1);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) f.mat.set(i, j, Cyc(Rational(coin(rng))));
    CHECK(phi2(to_algebra_element(f)).mat == f.mat);
  }
}

TEST_CASE("verify_algebra_equation") {
  FiniteGroup z2 = catalog_group("Z2");
  AlgebraSolution alg = to_algebra_element(linearise(group_solution(z2)));
  CHECK(verify_algebra_equation(alg, eq_tag::rpe));

  // R = 1 (x) 1 solves both equations
  AlgebraSolution unit;
  unit.d = 2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) unit.r[{i, i, j, j}] = Cyc::one(1);
  CHECK(verify_algebra_equation(unit, eq_tag::rpe));
  CHECK(verify_algebra_equation(unit, eq_tag::pe));

  // perturbing one constant breaks the identity
  AlgebraSolution bad = alg;
  bad.r.begin()->second = Cyc(Rational(2));
  CHECK_FALSE(verify_algebra_equation(bad, eq_tag::rpe));
}

TEST_CASE("set, linear and algebra verdicts agree on the |S|<=3 corpus") {
  auto agree = [](const FiniteSolution& s) {
    for (eq_tag eq : {eq_tag::rpe, eq_tag::pe}) {
      bool set_level = verify_equation(s, eq);
      LinearSolution f = linearise(s);
      CHECK(verify_linear(f, eq) == set_level);
      CHECK(verify_algebra_equation(to_algebra_element(f), eq) == set_level);
    }
  };
  for (int n : {2, 3})
    for (const auto& s : enumerate_solutions(n, eq_tag::rpe)) agree(s);
  agree(dual_group_solution(catalog_group("Z3")));
  agree(pe_group_solution(catalog_group("Z3")));
}

TEST_CASE("algebra flags match set flags") {
  for (const auto& s : enumerate_solutions(2, eq_tag::rpe)) {
    SolutionFlags sf = check_flags(s);
    SolutionFlags af = algebra_flags(to_algebra_element(linearise(s)));
    CHECK(sf.commutative == af.commutative);
    CHECK(sf.cocommutative == af.cocommutative);
  }
}
