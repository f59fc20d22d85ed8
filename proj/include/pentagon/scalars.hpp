#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "pentagon/errors.hpp"

namespace pentagon {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

long euler_phi(long m);

/// Coefficients of the m-th cyclotomic polynomial, ascending degree,
/// monic of degree phi(m). Cached; thread safe.
const std::vector<Int>& cyclotomic_polynomial(long m);

enum class field_op { add, sub, mul, div };

/// Exact element of Q(zeta_m): phi(m) rational coordinates in the power
/// basis 1, z, ..., z^{phi(m)-1} reduced mod the m-th cyclotomic polynomial.
/// The representation is canonical, so equality is coefficient-wise.
class Cyc {
 public:
  Cyc() : m_(1), c_(1) {}
  explicit Cyc(const Rational& q, long m = 1);
  Cyc(long m, std::vector<Rational> reduced_coeffs);  // takes phi(m) coeffs

  static Cyc zero(long m) { return Cyc(Rational(0), m); }
  static Cyc one(long m) { return Cyc(Rational(1), m); }
  static Cyc root(long m, long k = 1);  // zeta_m^k
  /// Reduce an arbitrary-degree polynomial in zeta_m.
  static Cyc from_polynomial(long m, const std::vector<Rational>& poly);

  long conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> rational_value() const;

  /// Same field element in Q(zeta_m2); m must divide m2.
  Cyc lifted(long m2) const;
  /// Try to express the element in Q(zeta_m2) for m2 | conductor.
  std::optional<Cyc> reduced(long m2) const;

  Cyc inverse() const;
  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Rendered as "p/q" for rationals, else sums "p/q*z^k" with z = zeta_m.
  std::string str() const;

 private:
  void check_same(const Cyc& o) const;
  long m_;
  std::vector<Rational> c_;
};

Cyc field_arith(const Cyc& a, const Cyc& b, field_op op);

struct NonnegativeView {
  std::optional<Rational> value;  // present iff rational and >= 0
  bool rational = false;          // distinguishes "negative" from "irrational"
};

/// The positivity probe used by every structure-constant check.
NonnegativeView as_nonnegative_rational(const Cyc& a);

std::string rational_str(const Rational& q);

}  // namespace pentagon
