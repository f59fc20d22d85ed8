#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pentagon/scalars.hpp"

namespace pentagon {

/// Dense exact vector. All entries share the conductor m.
struct Vec {
  int dim = 0;
  long m = 1;
  std::vector<Cyc> e;

  Vec() = default;
  Vec(int dim_, long m_) : dim(dim_), m(m_), e(static_cast<size_t>(dim_), Cyc::zero(m_)) {}
  Cyc& operator[](int i) { return e[static_cast<size_t>(i)]; }
  const Cyc& operator[](int i) const { return e[static_cast<size_t>(i)]; }
  bool is_zero() const;
  Vec lifted(long m2) const;
  friend bool operator==(const Vec& a, const Vec& b) = default;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Cyc& c, const Vec& v);

/// Sparse exact matrix; absent entries are zero, stored entries nonzero.
struct Mat {
  int rows = 0, cols = 0;
  long m = 1;
  std::map<std::pair<int, int>, Cyc> a;

  Mat() = default;
  Mat(int r, int c, long m_) : rows(r), cols(c), m(m_) {}
  static Mat identity(int n, long m);
  void set(int i, int j, const Cyc& v);
  const Cyc* find(int i, int j) const;
  Cyc get(int i, int j) const;
  Vec col(int j) const;
  Vec row(int i) const;
  Mat transposed() const;
  Mat lifted(long m2) const;
  friend bool operator==(const Mat& a, const Mat& b) = default;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);

/// Sparse order-3 tensor on a single index range 0..d-1.
struct Tensor3 {
  int d = 0;
  long m = 1;
  std::map<std::array<int, 3>, Cyc> a;

  Tensor3() = default;
  Tensor3(int d_, long m_) : d(d_), m(m_) {}
  void set(int i, int j, int k, const Cyc& v);
  Cyc get(int i, int j, int k) const;
  Tensor3 lifted(long m2) const;
  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;
};

/// Exact coefficients c with sum_i c_i v_i = target, when target lies in the
/// span; absent otherwise. Fraction-free (Bareiss) elimination.
std::optional<Vec> solve_in_span(const std::vector<Vec>& vectors, const Vec& target);

int rank(const std::vector<Vec>& vectors);

bool is_invertible(const Mat& p);
Mat inverse(const Mat& p);  // throws SingularMatrix

/// (i, j) iff v (of dim d*d) has exactly one nonzero coordinate, at (i, j),
/// with value exactly 1.
std::optional<std::pair<int, int>> pure_tensor_position(const Vec& v);

/// Kernel of the linear map given by rows of equations (each Vec is one
/// equation over the unknowns); returns a basis of the solution space.
std::vector<Vec> kernel_basis(const std::vector<Vec>& equations, int unknowns, long m);

}  // namespace pentagon
