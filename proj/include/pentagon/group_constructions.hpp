#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentagon/finite_group.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/linalg.hpp"
#include "pentagon/set_solution.hpp"

namespace pentagon {

/// Character table of a finite abelian group, values in Q(zeta_e) with e the
/// exponent.  Row c is the character chi_c; the rows form a group isomorphic
/// to A, exposed as `dual`.
struct CharacterTable {
  long exponent = 1;
  std::vector<std::vector<Cyc>> chi;  // chi[c][a]
  std::vector<int> dual_cayley;       // chi_i * chi_j = chi_{table[i][j]}
  int trivial = 0;

  int char_mul(int i, int j) const;
  int char_inv(int i) const;
  int index_of_values(const std::vector<Cyc>& values) const;  // -1 if absent
};

CharacterTable characters(const FiniteGroup& a);  // NotAbelian

/// Greedy decomposition of a finite abelian group into cyclic factors:
/// maximal-order generator extraction with exhaustive complement search.
std::vector<int> cyclic_decomposition_generators(const FiniteGroup& a);

/// e_chi = (1/|A|) sum_a chi(a^{-1}) a, one per character, verified to be
/// orthogonal idempotents summing to 1 with b e_chi = chi(b) e_chi.
std::vector<Vec> fourier_idempotents(const FiniteGroup& a);

struct MatchedPairGroups {
  FiniteGroup b, n;
  std::vector<std::vector<int>> ract;  // b <| u, values in B
  std::vector<std::vector<int>> lact;  // b |> u, values in N
};

struct MatchedPairCheck {
  bool ok = true;
  std::string witness;
};
MatchedPairCheck validate_matched_pair(const MatchedPairGroups& mp);

/// k[B]* bowtie k[N] on the basis delta_s # u (index s*|N| + u).
FinHopf bicrossed_hopf(const MatchedPairGroups& mp);  // InvalidMatchedPair

/// The set-theoretic solution on B x N induced by the bicrossed product;
/// verified RPE and verified equal to the Phi restriction on the delta # u
/// basis.
FiniteSolution bicrossed_set_solution(const MatchedPairGroups& mp);

/// All matched pairs on the two given groups (desk scale: exhaustive over
/// action homomorphisms, filtered by the compatibility laws).
std::vector<MatchedPairGroups> enumerate_matched_pairs(const FiniteGroup& b,
                                                       const FiniteGroup& n);

struct Semidirect {
  FiniteGroup group;          // order |A|*|N|, index (a, u) = a*|N| + u
  std::vector<int> embed_a;   // a -> index of (a, 1)
  std::vector<int> embed_n;   // u -> index of (1, u)
};

/// A |x N for an action act[u] in Aut(A); multiplication
/// (a, u)(b, v) = (a * act[u](b), u v).
Semidirect semidirect(const FiniteGroup& a, const FiniteGroup& n,
                      const std::vector<std::vector<int>>& act);  // NotAnAction

struct FourierBasis {
  Mat basis;                                // columns e_chi u, ordered (chi, u)
  FiniteSolution solution;                  // induced table on A^dual x N
  std::vector<std::pair<int, int>> labels;  // (chi index, position in N list)
  CharacterTable chars;
  std::vector<int> a_elements, n_elements;  // as indices in G
};

/// The basis {e_chi u} of k[G] for a splitting G = A x| N with A abelian
/// normal and N a complement; Phi-set theoretic with the dual-action table.
FourierBasis fourier_basis_of_group_algebra(const FiniteGroup& g,
                                            const std::vector<int>& a_elements,
                                            const std::vector<int>& n_elements);

/// Transport of the A^dual x N solution through a nondegenerate N-invariant
/// bicharacter; absent when the pairing is not equivariant.
std::optional<FiniteSolution> bicharacter_transport(
    const FiniteGroup& a, const FiniteGroup& n, const std::vector<std::vector<int>>& act,
    const std::vector<std::vector<Cyc>>& pairing);  // NotABicharacter

struct MpdEquationReport {
  bool typechecks = false;
  bool holds = false;
  std::string detail;  // signature mismatch description or witness entry
};

struct MpdReport {
  MpdEquationReport mult_pentagon, cop_pentagon, action_coaction;
  bool rpe = false;
  LinearSolution phi;  // Phi_bowtie built from the interfaces
};

/// Matched-pair datum of RPE solutions: checks the printed interface
/// equations where their composites typecheck, reports signature mismatches
/// verbatim otherwise, and independently builds Phi_bowtie and tests the RPE.
MpdReport mpd_verify_and_build(const FinHopf& h, const FinHopf& k, const Mat& xi_mult,
                               const Mat& xi_cop);

}  // namespace pentagon
