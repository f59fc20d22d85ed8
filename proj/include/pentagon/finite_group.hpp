#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentagon/errors.hpp"

namespace pentagon {

/// Finite group as a validated Cayley table over indices 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup(int n, std::vector<int> cayley);  // validates axioms

  int order() const { return n_; }
  int mul(int a, int b) const { return t_[static_cast<size_t>(a * n_ + b)]; }
  int identity() const { return e_; }
  int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
  const std::vector<int>& cayley() const { return t_; }

  bool is_abelian() const;
  int element_order(int a) const;
  int exponent() const;
  int power(int a, long k) const;

  /// Smallest subgroup containing the given elements, as a sorted index list.
  std::vector<int> closure(std::vector<int> gens) const;
  /// All subgroups, each a sorted index list; deterministic order
  /// (by size, then lexicographic).
  std::vector<std::vector<int>> subgroups() const;
  bool is_subgroup(const std::vector<int>& elems) const;
  bool is_normal(const std::vector<int>& subgroup) const;
  /// Group structure on a subgroup; elems must be sorted and closed.
  FiniteGroup restricted_to(const std::vector<int>& elems) const;

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup dihedral(int n);      // order 2n
  static FiniteGroup quaternion8();
  static FiniteGroup alternating4();
  static FiniteGroup dicyclic3();          // order 12

  /// An isomorphism onto `other` as an index map, if one exists (backtracking;
  /// meant for desk-scale orders).
  std::optional<std::vector<int>> isomorphism_to(const FiniteGroup& other) const;

 private:
  int n_;
  std::vector<int> t_;
  int e_ = -1;
  std::vector<int> inv_;
};

}  // namespace pentagon
