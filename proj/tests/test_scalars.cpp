#include <random>

#include "doctest.h"
#include "pentagon/json_io.hpp"
#include "pentagon/scalars.hpp"

using namespace pentagon;

namespace {

Cyc rq(long m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  std::vector<Rational> c(static_cast<size_t>(euler_phi(m)));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Cyc(m, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic basics") {
  CHECK(Cyc::root(3) + Cyc::root(3, 2) == Cyc(Rational(-1), 3));
  CHECK(Cyc::root(4) * Cyc::root(4) == Cyc(Rational(-1), 4));
  Cyc one3 = Cyc::one(3), z3 = Cyc::root(3);
  Cyc d = field_arith(one3, one3 + z3, field_op::div);
  CHECK(d == -z3);
  CHECK((one3 + z3) * (-z3) == one3);
}

TEST_CASE("lifting") {
  CHECK(Cyc(Rational(-1), 2).lifted(4) == Cyc::root(4, 2));
  CHECK(Cyc(Rational(3, 2)).lifted(6) == Cyc(Rational(3, 2), 6));
  Cyc lifted = Cyc::root(3).lifted(6);
  CHECK(lifted == Cyc::root(6, 2));
  // minimal polynomial survives the lift: x^2 + x + 1 = 0
  CHECK((lifted * lifted + lifted + Cyc::one(6)).is_zero());
  CHECK_THROWS_AS((void)Cyc::root(3).lifted(4), error);
}

TEST_CASE("lift then reduce is the identity") {
  std::mt19937_64 rng(7);
  for (long m : {1L, 2L, 3L, 4L, 6L}) {
    for (long m2 : {12L, 24L}) {
      Cyc a = rq(m, rng);
      auto back = a.lifted(m2).reduced(m);
      REQUIRE(back.has_value());
      CHECK(*back == a);
    }
  }
  // zeta_12 does not live in Q(zeta_4)
  CHECK_FALSE(Cyc::root(12).reduced(4).has_value());
}

TEST_CASE("nonnegative rational view") {
  CHECK(as_nonnegative_rational(Cyc(Rational(1))).value == Rational(1));
  auto neg = as_nonnegative_rational(Cyc(Rational(-1, 2)));
  CHECK_FALSE(neg.value.has_value());
  CHECK(neg.rational);
  auto irr = as_nonnegative_rational(Cyc::root(3));
  CHECK_FALSE(irr.value.has_value());
  CHECK_FALSE(irr.rational);
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(20240229);
  for (long m : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 12L}) {
    for (int trial = 0; trial < 10; ++trial) {
      Cyc a = rq(m, rng), b = rq(m, rng), c = rq(m, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Cyc::zero(m));
      if (!a.is_zero()) CHECK(a * field_arith(Cyc::one(m), a, field_op::div) == Cyc::one(m));
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS((void)(Cyc::one(3) / Cyc::zero(3)), error);
  try {
    (void)(Cyc::one(3) + Cyc::one(4));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::conductor_mismatch);
  }
}

TEST_CASE("rendering and json round trip") {
  Cyc a = Cyc::root(12, 7) + Cyc(Rational(1, 2), 12);
  CHECK(a.str() == "1/2 - z");
  CHECK(cyc_from_json(to_json(a)) == a);
  CHECK(cyc_from_json(to_json(Cyc(Rational(-22, 7)))) == Cyc(Rational(-22, 7)));
  // big integers survive the string encoding
  Rational big(Int("123456789012345678901234567890"), Int(7));
  CHECK(rational_from_json(to_json(big)) == big);
}
