#include "pentagon/scalars.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace pentagon {

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::conductor_mismatch: return "ConductorMismatch";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_square_dimension: return "NotASquareDimension";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::not_bijective: return "NotBijective";
    case errc::not_rpe: return "NotRPE";
    case errc::tag_mismatch: return "TagMismatch";
    case errc::structure_violation: return "StructureViolation";
    case errc::not_abelian: return "NotAbelian";
    case errc::not_an_action: return "NotAnAction";
    case errc::invalid_matched_pair: return "InvalidMatchedPair";
    case errc::not_normal: return "NotNormal";
    case errc::not_complement: return "NotComplement";
    case errc::not_a_bicharacter: return "NotABicharacter";
    case errc::not_a_coalgebra_basis: return "NotACoalgebraBasis";
    case errc::counit_zero: return "CounitZero";
    case errc::unit_not_in_basis: return "UnitNotInBasis";
    case errc::size_too_large: return "SizeTooLarge";
    case errc::unknown_name: return "UnknownName";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

long euler_phi(long m) {
  if (m <= 0) fail(errc::bad_input, "euler_phi: conductor must be positive");
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Rational>;  // ascending degree, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Remainder of a by monic divisor d.
Poly poly_mod(Poly a, const Poly& d) {
  trim(a);
  size_t deg_d = d.size() - 1;
  while (a.size() > deg_d) {
    Rational lead = a.back();
    size_t shift = a.size() - 1 - deg_d;
    if (lead != 0)
      for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= lead * d[i];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Exact quotient of a by b, both with integer coefficients, b monic-ish
// (leading coefficient +-1); used only for building cyclotomics.
std::vector<Int> int_poly_div(std::vector<Int> a, const std::vector<Int>& b) {
  std::vector<Int> q(a.size() - b.size() + 1, Int(0));
  for (size_t k = q.size(); k-- > 0;) {
    Int c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
  }
  return q;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a = g mod b, g = gcd(a, b).
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly b) {
  Poly u0{Rational(1)}, u1{};
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a = q*b + r
    Poly r = a, q;
    size_t deg_b = b.size() - 1;
    if (r.size() >= b.size()) {
      q.assign(r.size() - b.size() + 1, Rational(0));
      while (r.size() >= b.size()) {
        Rational c = r.back() / b.back();
        size_t shift = r.size() - 1 - deg_b;
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
        if (r.empty()) break;
      }
    }
    // u2 = u0 - q*u1
    Poly u2 = u0;
    Poly qu1 = poly_mul(q, u1);
    if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rational(0));
    for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
    trim(u2);
    a.swap(b);
    b = r;
    u0.swap(u1);
    u1 = u2;
  }
  return {a, u0};
}

std::vector<long> divisors(long m) {
  std::vector<long> d;
  for (long i = 1; i * i <= m; ++i)
    if (m % i == 0) {
      d.push_back(i);
      if (i != m / i) d.push_back(m / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m <= 0) fail(errc::bad_input, "cyclotomic_polynomial: m must be positive");
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::function<const std::vector<Int>&(long)> get = [&](long k) -> const std::vector<Int>& {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    std::vector<Int> num(k + 1, Int(0));
    num[0] = -1;
    num[k] = 1;
    for (long d : divisors(k))
      if (d < k) num = int_poly_div(num, get(d));
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

Cyc::Cyc(const Rational& q, long m) : m_(m) {
  c_.assign(static_cast<size_t>(euler_phi(m)), Rational(0));
  c_[0] = q;
}

Cyc::Cyc(long m, std::vector<Rational> reduced_coeffs) : m_(m), c_(std::move(reduced_coeffs)) {
  if (c_.size() != static_cast<size_t>(euler_phi(m)))
    fail(errc::bad_input, "Cyc: coefficient count must be phi(m)");
}

Cyc Cyc::from_polynomial(long m, const std::vector<Rational>& poly) {
  const auto& phi_int = cyclotomic_polynomial(m);
  Poly mod(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) mod[i] = Rational(phi_int[i]);
  Poly r = poly_mod(poly, mod);
  std::vector<Rational> c(static_cast<size_t>(euler_phi(m)), Rational(0));
  for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
  return Cyc(m, std::move(c));
}

Cyc Cyc::root(long m, long k) {
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> p(static_cast<size_t>(k) + 1, Rational(0));
  p[static_cast<size_t>(k)] = 1;
  return from_polynomial(m, p);
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyc::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

void Cyc::check_same(const Cyc& o) const {
  if (m_ != o.m_)
    fail(errc::conductor_mismatch,
         "conductor mismatch: " + std::to_string(m_) + " vs " + std::to_string(o.m_));
}

Cyc Cyc::lifted(long m2) const {
  if (m2 % m_ != 0)
    fail(errc::not_a_divisor, "lift: " + std::to_string(m_) + " does not divide " + std::to_string(m2));
  if (m2 == m_) return *this;
  long k = m2 / m_;
  std::vector<Rational> p(c_.size() * static_cast<size_t>(k) + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * static_cast<size_t>(k)] = c_[i];
  return from_polynomial(m2, p);
}

std::optional<Cyc> Cyc::reduced(long m2) const {
  if (m_ % m2 != 0) fail(errc::not_a_divisor, "reduce: target conductor must divide");
  if (m2 == m_) return *this;
  // Solve: which element of Q(zeta_{m2}) lifts to us?  The lift is linear in
  // the phi(m2) coordinates, so express our coordinates in the lifted images
  // of the small power basis.
  long phi2 = euler_phi(m2);
  std::vector<Cyc> images;
  for (long j = 0; j < phi2; ++j) {
    std::vector<Rational> unit(static_cast<size_t>(phi2), Rational(0));
    unit[static_cast<size_t>(j)] = 1;
    images.push_back(Cyc(m2, unit).lifted(m_));
  }
  // Little dense solve over Q (columns = images).
  size_t rows = c_.size(), cols = images.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) a[i][j] = images[j].coeffs()[i];
    a[i][cols] = c_[i];
  }
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = a[r][col];
    for (size_t j = col; j <= cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i)
      if (i != r && a[i][col] != 0) {
        Rational f = a[i][col];
        for (size_t j = col; j <= cols; ++j) a[i][j] -= f * a[r][j];
      }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  std::vector<Rational> sol(cols, Rational(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) sol[static_cast<size_t>(pivot_col[i])] = a[i][cols];
  return Cyc(m2, std::move(sol));
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  check_same(o);
  *this = from_polynomial(m_, poly_mul(c_, o.c_));
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "division by zero");
  if (is_rational()) {
    Cyc r = *this;
    r.c_[0] = Rational(1) / c_[0];
    return r;
  }
  const auto& phi_int = cyclotomic_polynomial(m_);
  Poly mod(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) mod[i] = Rational(phi_int[i]);
  auto [g, u] = poly_half_ext_gcd(c_, mod);
  // Phi_m is irreducible over Q, so gcd is a nonzero constant.
  if (g.size() != 1 || g[0] == 0)
    fail(errc::division_by_zero, "inverse: gcd with cyclotomic polynomial not constant");
  for (auto& x : u) x /= g[0];
  return from_polynomial(m_, u);
}

Cyc& Cyc::operator/=(const Cyc& o) {
  check_same(o);
  *this *= o.inverse();
  return *this;
}

Cyc field_arith(const Cyc& a, const Cyc& b, field_op op) {
  switch (op) {
    case field_op::add: return a + b;
    case field_op::sub: return a - b;
    case field_op::mul: return a * b;
    case field_op::div: return a / b;
  }
  fail(errc::bad_input, "field_arith: unknown op");
}

NonnegativeView as_nonnegative_rational(const Cyc& a) {
  NonnegativeView v;
  auto q = a.rational_value();
  v.rational = q.has_value();
  if (q && *q >= 0) v.value = *q;
  return v;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

std::string Cyc::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << rational_str(v);
    } else {
      if (v != 1) os << rational_str(v) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace pentagon
