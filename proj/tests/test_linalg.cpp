#include <random>

#include "doctest.h"
#include "pentagon/catalog.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/linalg.hpp"

using namespace pentagon;

namespace {

Vec vec_of(std::vector<int> xs) {
  Vec v(static_cast<int>(xs.size()), 1);
  for (size_t i = 0; i < xs.size(); ++i) v[static_cast<int>(i)] = Cyc(Rational(xs[i]));
  return v;
}

}  // namespace

TEST_CASE("solve_in_span") {
  auto c = solve_in_span({vec_of({1, 0})}, vec_of({2, 0}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Cyc(Rational(2)));

  c = solve_in_span({vec_of({1, 1}), vec_of({1, -1})}, vec_of({0, 1}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Cyc(Rational(1, 2)));
  CHECK((*c)[1] == Cyc(Rational(-1, 2)));

  CHECK_FALSE(solve_in_span({vec_of({1, 0})}, vec_of({0, 1})).has_value());
}

TEST_CASE("solve_in_span recombination property") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coin(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 5, k = 3;
    std::vector<Vec> basis;
    for (int j = 0; j < k; ++j) {
      Vec v(dim, 1);
      for (int i = 0; i < dim; ++i) v[i] = Cyc(Rational(coin(rng)));
      basis.push_back(v);
    }
    Vec target(dim, 1);
    for (int j = 0; j < k; ++j) target = target + Cyc(Rational(coin(rng))) * basis[static_cast<size_t>(j)];
    auto c = solve_in_span(basis, target);
    REQUIRE(c.has_value());
    Vec rebuilt(dim, 1);
    for (int j = 0; j < k; ++j) rebuilt = rebuilt + (*c)[j] * basis[static_cast<size_t>(j)];
    CHECK(rebuilt == target);
  }
}

TEST_CASE("pure tensor position") {
  Vec v(4, 1);
  v[0 * 2 + 1] = Cyc(Rational(1));
  CHECK(pure_tensor_position(v) == std::make_pair(0, 1));
  v[0 * 2 + 1] = Cyc(Rational(2));
  CHECK_FALSE(pure_tensor_position(v).has_value());
  Vec w(4, 1);
  w[0] = Cyc(Rational(1));
  w[3] = Cyc(Rational(1));
  CHECK_FALSE(pure_tensor_position(w).has_value());
  Vec bad(3, 1);
  CHECK_THROWS_AS((void)pure_tensor_position(bad), error);
}

TEST_CASE("pure tensor position agrees with a brute-force scan") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coin(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 3;
    Vec v(d * d, 1);
    for (int i = 0; i < d * d; ++i)
      if (coin(rng) == 0) v[i] = Cyc(Rational(coin(rng) - 2));
    int nonzeros = 0, last = -1;
    for (int i = 0; i < d * d; ++i)
      if (!v[i].is_zero()) {
        ++nonzeros;
        last = i;
      }
    bool expect = nonzeros == 1 && v[last] == Cyc::one(1);
    CHECK(pure_tensor_position(v).has_value() == expect);
  }
}

TEST_CASE("matrix inverse and rank") {
  Mat p(2, 2, 1);
  p.set(0, 0, Cyc(Rational(1)));
  p.set(0, 1, Cyc(Rational(1)));
  p.set(1, 0, Cyc(Rational(1)));
  p.set(1, 1, Cyc(Rational(-1)));
  Mat q = inverse(p);
  CHECK(p * q == Mat::identity(2, 1));
  CHECK(q * p == Mat::identity(2, 1));
  Mat sing(2, 2, 1);
  sing.set(0, 0, Cyc(Rational(1)));
  sing.set(1, 0, Cyc(Rational(2)));
  CHECK_FALSE(is_invertible(sing));
  CHECK_THROWS_AS((void)inverse(sing), error);
}

TEST_CASE("change of basis on k[Z2]") {
  FinHopf h = group_algebra(catalog_group("Z2"));

  SUBCASE("identity leaves the tensors unchanged") {
    FinHopf t = change_basis(h, Mat::identity(2, 1));
    CHECK(t.mult == h.mult);
    CHECK(t.comult == h.comult);
    CHECK(t.unit == h.unit);
    CHECK(t.counit == h.counit);
  }

  SUBCASE("a permutation permutes the structure constants") {
    Mat p(2, 2, 1);
    p.set(0, 1, Cyc(Rational(1)));
    p.set(1, 0, Cyc(Rational(1)));
    FinHopf t = change_basis(h, p);
    // new basis vectors are (a, 1): products (a)(a) = 1 -> index 1
    CHECK(t.mult.get(0, 0, 1) == Cyc::one(1));
    CHECK(t.mult.get(0, 1, 0) == Cyc::one(1));
  }

  SUBCASE("the Fourier matrix diagonalises the multiplication") {
    // columns (1 +- a)/2; hand-computed products: e0^2 = e0, e1^2 = e1,
    // e0 e1 = 0
    Mat p(2, 2, 1);
    p.set(0, 0, Cyc(Rational(1, 2)));
    p.set(1, 0, Cyc(Rational(1, 2)));
    p.set(0, 1, Cyc(Rational(1, 2)));
    p.set(1, 1, Cyc(Rational(-1, 2)));
    FinHopf t = change_basis(h, p);
    Tensor3 want(2, 1);
    want.set(0, 0, 0, Cyc::one(1));
    want.set(1, 1, 1, Cyc::one(1));
    CHECK(t.mult == want);
  }

  SUBCASE("functorial: P then Q equals Q*P") {
    Mat p(2, 2, 1), q(2, 2, 1);
    p.set(0, 0, Cyc(Rational(1)));
    p.set(0, 1, Cyc(Rational(1)));
    p.set(1, 1, Cyc(Rational(1)));
    q.set(0, 0, Cyc(Rational(2)));
    q.set(1, 0, Cyc(Rational(1)));
    q.set(1, 1, Cyc(Rational(1)));
    FinHopf two_steps = change_basis(change_basis(h, p), q);
    FinHopf one_step = change_basis(h, p * q);
    CHECK(two_steps.mult == one_step.mult);
    CHECK(two_steps.comult == one_step.comult);
    CHECK(two_steps.unit == one_step.unit);
    CHECK(two_steps.counit == one_step.counit);
    REQUIRE(two_steps.antipode.has_value());
    CHECK(*two_steps.antipode == *one_step.antipode);
  }

  SUBCASE("round trip with the inverse basis") {
    Mat p(2, 2, 1);
    p.set(0, 0, Cyc(Rational(1)));
    p.set(0, 1, Cyc(Rational(1)));
    p.set(1, 1, Cyc(Rational(1)));
    FinHopf back = change_basis(change_basis(h, p), inverse(p));
    CHECK(back.mult == h.mult);
    CHECK(back.comult == h.comult);
  }
}

TEST_CASE("kernel basis") {
  // x + y = 0 over dim 3 unknowns: kernel has dim 2
  Vec eq(3, 1);
  eq[0] = Cyc(Rational(1));
  eq[1] = Cyc(Rational(1));
  auto basis = kernel_basis({eq}, 3, 1);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK((v[0] + v[1]).is_zero());
}
