#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pentagon/finite_group.hpp"
#include "pentagon/group_constructions.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/set_solution.hpp"

namespace pentagon {

/// Exhaustive scan of the maps on S x S (bijections unless bijective_only is
/// false and n <= 2), filtered by the chosen equation; deterministic
/// lexicographic order.  Bijective mode is bounded at n <= 3.
std::vector<FiniteSolution> enumerate_solutions(int n, eq_tag eq, bool bijective_only = true,
                                                bool up_to_equivalence = false);

/// All pairs (A, N) with A a normal abelian subgroup and N a complement;
/// includes (1, G) and, for abelian G, (G, 1).  Bounded at |G| <= 24.
std::vector<std::pair<std::vector<int>, std::vector<int>>> enumerate_splittings(
    const FiniteGroup& g);

struct PhiBasisEntry {
  std::vector<int> a_elements, n_elements;
  Mat basis;
  FiniteSolution solution;
};

/// One Phi-set theoretic basis of k[G] per splitting (the lambda = 1
/// representative); complete up to scalar by the classification theorem.
std::vector<PhiBasisEntry> enumerate_phi_bases(const FiniteGroup& g);

struct RecognizedBasis {
  std::vector<int> a_elements;  // sorted G-indices
  std::vector<int> n_elements;  // sorted G-indices
  Cyc lambda;
  /// basis index -> (character index into `characters`, coset representative
  /// in N as a G-index)
  std::vector<std::pair<int, int>> assignment;
  std::vector<std::vector<Cyc>> characters;  // chi_c values on A (A-position order)
  FiniteSolution solution;
};

struct RecognitionFailure {
  std::string stage;
  std::string witness;
};

/// Runs the classification proof as an algorithm on a candidate basis of
/// k[G]: supports, subgroup A, characters, purity, coset representatives,
/// cocycle vanishing, and the final solution-table identity.
std::variant<RecognizedBasis, RecognitionFailure> recognize_basis(const FiniteGroup& g,
                                                                  const Mat& basis);

struct SupportReport {
  struct Item {
    std::string name;
    bool ok = true;
    std::string witness;
  };
  std::vector<Item> items;
  bool all_ok() const;
};

/// The support identities of a Phi-set theoretic basis of k[G], checked on
/// every basis pair, plus the uniform bound |supp(b)| <= |supp(c)|^2.
SupportReport support_invariants(const FiniteGroup& g, const Mat& basis);

}  // namespace pentagon
