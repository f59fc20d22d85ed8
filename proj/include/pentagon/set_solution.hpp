#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentagon/errors.hpp"

namespace pentagon {

enum class eq_tag { rpe, pe, none };

const char* eq_tag_name(eq_tag t);
eq_tag eq_tag_from_name(const std::string& name);

/// A map on S x S for an indexed finite set S, stored as a pair-to-pair
/// lookup table; written s(x,y) = (psi_y(x), y o x) in the RPE convention.
class FiniteSolution {
 public:
  FiniteSolution(int n, std::vector<std::pair<int, int>> table, eq_tag tag = eq_tag::none);

  static FiniteSolution identity(int n);

  int size() const { return n_; }
  eq_tag tag() const { return tag_; }
  void set_tag(eq_tag t) { tag_ = t; }
  std::pair<int, int> apply(int x, int y) const { return t_[static_cast<size_t>(x * n_ + y)]; }
  const std::vector<std::pair<int, int>>& table() const { return t_; }

  /// Witness is the lexicographically smallest pair of colliding inputs.
  bool is_bijective(std::pair<std::pair<int, int>, std::pair<int, int>>* witness = nullptr) const;

  int psi(int y, int x) const { return apply(x, y).first; }   // psi_y(x)
  int circ(int y, int x) const { return apply(x, y).second; }  // y o x

  friend bool operator==(const FiniteSolution& a, const FiniteSolution& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> t_;
  eq_tag tag_;
};

bool verify_equation(const FiniteSolution& s, eq_tag eq);

FiniteSolution invert(const FiniteSolution& s);  // NotBijective with witness

/// tau o s^{-1} o tau; preserves the equation tag on bijective solutions.
FiniteSolution dual(const FiniteSolution& s);

struct SolutionFlags {
  bool commutative = false;    // Z13 Z23 = Z23 Z13
  bool cocommutative = false;  // Z12 Z13 = Z13 Z12
};
SolutionFlags check_flags(const FiniteSolution& s);

FiniteSolution product(const FiniteSolution& a, const FiniteSolution& b);

/// Bijection f with (f x f) o s1 = s2 o (f x f), absent iff none exists.
std::optional<std::vector<int>> equivalence(const FiniteSolution& s1, const FiniteSolution& s2);

/// Structure of a finite bijective RPE solution: (S, o) is a left group
/// E x G, every psi_x is the identity or fixed-point free, and the distinct
/// psi maps form a group under composition.
struct LeftGroupAnalysis {
  int n = 0;
  std::vector<std::vector<int>> psi;  // psi[y] = table of psi_y
  std::vector<int> idempotents;       // E, ascending
  int unit = -1;                      // smallest idempotent with psi = id
  std::vector<int> group_part;        // G = unit o S, ascending
  std::vector<int> retract_reps;      // Ebar: smallest index per retract class
  int class_size = 1;
  std::vector<int> psi_class;         // for each y: index into retract_reps with equal psi

  int circ(int y, int x) const { return op_[static_cast<size_t>(y * n + x)]; }
  int pi_G(int x) const { return circ(unit, x); }
  int pi_E(int x) const;
  int inv_G(int g) const;  // inverse of pi_G(g) inside the group part
  /// nu_psi(y'): all y with psi_y = psi_{y'}.
  const std::vector<int>& nu(int y_prime) const;
  /// mu_o(x'): {e o x' : e in E}.
  std::vector<int> mu(int x_prime) const;
  /// Ebar representative whose psi equals the given permutation table.
  int rep_of_psi_table(const std::vector<int>& p) const;
  int rep_for(int y) const { return retract_reps[static_cast<size_t>(psi_class[static_cast<size_t>(y)])]; }

  std::vector<int> op_;                       // y o x at y*n+x
  std::vector<std::vector<int>> nu_classes_;  // per retract rep
};

LeftGroupAnalysis left_group_analysis(const FiniteSolution& s);

}  // namespace pentagon
