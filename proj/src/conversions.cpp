#include "pentagon/conversions.hpp"

namespace pentagon {

LinearSolution linearise(const FiniteSolution& s) {
  int n = s.size();
  LinearSolution f;
  f.d = n;
  f.tag = s.tag();
  f.mat = Mat(n * n, n * n, 1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = s.apply(x, y);
      f.mat.set(a * n + b, x * n + y, Cyc::one(1));
    }
  return f;
}

LinearSolution pullback(const FiniteSolution& s) {
  // f_s(delta_g (x) delta_h) = delta-basis vector at s^{-1}(g, h); on
  // coordinates this is the linearisation of s^{-1}, and the functor is
  // contravariant so the equation tags swap.
  LinearSolution f = linearise(invert(s));
  if (s.tag() == eq_tag::rpe)
    f.tag = eq_tag::pe;
  else if (s.tag() == eq_tag::pe)
    f.tag = eq_tag::rpe;
  return f;
}

namespace {

// Z12 = M (x) I, Z23 = I (x) M, Z13 = (I x tau)(M x I)(I x tau) on V^{(x)3}.
Mat embed12(const Mat& m, int d) { return kron(m, Mat::identity(d, m.m)); }
Mat embed23(const Mat& m, int d) { return kron(Mat::identity(d, m.m), m); }
Mat embed13(const Mat& m, int d) {
  Mat r(d * d * d, d * d * d, m.m);
  for (const auto& [ij, v] : m.a) {
    int a = ij.first / d, c = ij.second / d;
    int b = ij.first % d, e = ij.second % d;
    // (a (x) b acting on slots 1 and 3) with slot 2 untouched
    for (int y = 0; y < d; ++y) {
      Cyc& dst = r.a.try_emplace({(a * d + y) * d + b, (c * d + y) * d + e}, Cyc::zero(m.m))
                     .first->second;
      dst += v;
    }
  }
  return r;
}

}  // namespace

bool verify_linear(const LinearSolution& f, eq_tag eq) {
  int d = f.d;
  Mat z12 = embed12(f.mat, d), z23 = embed23(f.mat, d), z13 = embed13(f.mat, d);
  if (eq == eq_tag::rpe) return z12 * z13 * z23 == z23 * z12;
  if (eq == eq_tag::pe) return z23 * z13 * z12 == z12 * z23;
  fail(errc::bad_input, "verify_linear: tag must be rpe or pe");
}

SolutionFlags linear_flags(const LinearSolution& f) {
  int d = f.d;
  Mat z12 = embed12(f.mat, d), z23 = embed23(f.mat, d), z13 = embed13(f.mat, d);
  SolutionFlags out;
  out.commutative = z13 * z23 == z23 * z13;
  out.cocommutative = z12 * z13 == z13 * z12;
  return out;
}

AlgebraSolution to_algebra_element(const LinearSolution& f) {
  AlgebraSolution alg;
  alg.d = f.d;
  alg.m = f.mat.m;
  alg.tag = f.tag;
  int d = f.d;
  // T(v_t (x) v_h) = sum alpha_{kl}^{th} v_k (x) v_l
  for (const auto& [ij, v] : f.mat.a) {
    int k = ij.first / d, l = ij.first % d;
    int t = ij.second / d, h = ij.second % d;
    alg.r[{k, t, l, h}] = v;
  }
  return alg;
}

LinearSolution phi2(const AlgebraSolution& alg) {
  LinearSolution f;
  f.d = alg.d;
  f.tag = alg.tag;
  f.mat = Mat(alg.d * alg.d, alg.d * alg.d, alg.m);
  for (const auto& [ktlh, v] : alg.r) {
    auto [k, t, l, h] = ktlh;
    Cyc& dst = f.mat.a.try_emplace({k * alg.d + l, t * alg.d + h}, Cyc::zero(alg.m)).first->second;
    dst += v;
  }
  for (auto it = f.mat.a.begin(); it != f.mat.a.end();)
    it = it->second.is_zero() ? f.mat.a.erase(it) : std::next(it);
  return f;
}

namespace {

// Elements of A^{(x)3} for A = End(V), keyed ((i1,j1),(i2,j2),(i3,j3)).
using Key3 = std::array<int, 6>;
using Elt3 = std::map<Key3, Cyc>;

Elt3 mul3(const Elt3& x, const Elt3& y, long m) {
  Elt3 r;
  for (const auto& [a, va] : x)
    for (const auto& [b, vb] : y) {
      if (a[1] != b[0] || a[3] != b[2] || a[5] != b[4]) continue;
      Key3 k{a[0], b[1], a[2], b[3], a[4], b[5]};
      Cyc& dst = r.try_emplace(k, Cyc::zero(m)).first->second;
      dst += va * vb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

namespace {

void embed_all(const AlgebraSolution& alg, Elt3& r12, Elt3& r13, Elt3& r23) {
  int d = alg.d;
  long m = alg.m;
  for (const auto& [ktlh, v] : alg.r) {
    auto [k, t, l, h] = ktlh;
    for (int u = 0; u < d; ++u) {
      {
        Cyc& dst = r12.try_emplace(Key3{k, t, l, h, u, u}, Cyc::zero(m)).first->second;
        dst += v;
      }
      {
        Cyc& dst = r23.try_emplace(Key3{u, u, k, t, l, h}, Cyc::zero(m)).first->second;
        dst += v;
      }
      {
        Cyc& dst = r13.try_emplace(Key3{k, t, u, u, l, h}, Cyc::zero(m)).first->second;
        dst += v;
      }
    }
  }
}

}  // namespace

bool verify_algebra_equation(const AlgebraSolution& alg, eq_tag eq) {
  long m = alg.m;
  Elt3 r12, r13, r23;
  embed_all(alg, r12, r13, r23);
  if (eq == eq_tag::rpe)
    return mul3(mul3(r12, r13, m), r23, m) == mul3(r23, r12, m);
  if (eq == eq_tag::pe)
    return mul3(mul3(r23, r13, m), r12, m) == mul3(r12, r23, m);
  fail(errc::bad_input, "verify_algebra_equation: tag must be rpe or pe");
}

SolutionFlags algebra_flags(const AlgebraSolution& alg) {
  long m = alg.m;
  Elt3 r12, r13, r23;
  embed_all(alg, r12, r13, r23);
  SolutionFlags out;
  out.commutative = mul3(r13, r23, m) == mul3(r23, r13, m);
  out.cocommutative = mul3(r12, r13, m) == mul3(r13, r12, m);
  return out;
}

}  // namespace pentagon
