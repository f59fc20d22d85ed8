#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pentagon/conversions.hpp"
#include "pentagon/finite_group.hpp"
#include "pentagon/linalg.hpp"

namespace pentagon {

/// Finite-dimensional bialgebra/Hopf algebra by structure constants on a
/// basis b_0..b_{d-1}:
///   b_i b_j = sum_k mult[{i,j,k}] b_k
///   Delta(b_i) = sum_{j,k} comult[{i,j,k}] b_j (x) b_k
///   unit = coordinates of 1, counit[i] = eps(b_i),
///   antipode column j = S(b_j)  (optional: bialgebras are first-class).
struct FinHopf {
  int d = 0;
  long m = 1;
  Vec unit;
  Vec counit;
  Tensor3 mult;
  Tensor3 comult;
  std::optional<Mat> antipode;

  FinHopf lifted(long m2) const;
};

Vec apply_mult(const FinHopf& h, const Vec& u, const Vec& v);
Vec apply_comult(const FinHopf& h, const Vec& u);  // d^2 coordinates

struct AxiomReport {
  struct Item {
    std::string name;
    bool ok;
    std::string witness;
  };
  std::vector<Item> items;
  bool all_ok() const;
  std::string first_failure() const;
};

AxiomReport verify_hopf(const FinHopf& h);

/// Phi_H = (1 (x) m)(Delta (x) 1), i.e. a (x) b -> a_(1) (x) a_(2) b, as a
/// d^2 x d^2 matrix.  Verified to satisfy the RPE; when an antipode is
/// present, also verified bijective with inverse m (x) n -> m_(0) (x) S(m_(1)) n.
LinearSolution phi_map(const FinHopf& h);

/// Re-express all structure constants in the basis whose j-th vector is
/// column j of p (coordinates in the current basis).
FinHopf change_basis(const FinHopf& h, const Mat& p);

struct PhiBasisFailure {
  int b = 0, c = 0;  // first offending pair, lexicographic
  Vec coefficients;  // image coordinates in the candidate product basis
};

/// Tests whether the candidate basis is Phi-set theoretic: every
/// Phi(b (x) c) must be a pure tensor with coefficient exactly 1.  On
/// success returns the induced set-theoretic solution (RPE).
std::variant<FiniteSolution, PhiBasisFailure> is_phi_set_theoretic(const FinHopf& h,
                                                                   const Mat& basis);

enum class positivity { positive, negative, indeterminate, absent };

struct PositivityReport {
  struct Item {
    std::string name;
    positivity verdict = positivity::absent;
    std::string witness;  // first offending constant, rendered exactly
  };
  Item unit, counit, mult, comult, antipode;
  bool positive = false;         // all five
  bool nearly_positive = false;  // conditions 1-4
};

PositivityReport positivity_check(const FinHopf& h, const Mat& basis);

FinHopf dual_hopf(const FinHopf& h);

struct HopfFlags {
  bool commutative = false;
  bool cocommutative = false;
};
HopfFlags hopf_flags(const FinHopf& h);

struct GrouplikeResult {
  FiniteGroup group;      // table of { eps(b)^{-1} b } under multiplication
  Mat rescaling;          // basis matrix of the group-like basis
  std::vector<int> order; // basis index -> group element index (identity map here)
};

/// Checks Delta(b) = eps(b)^{-1} b (x) b for every candidate basis vector and
/// returns the group of rescaled basis elements, verifying h is isomorphic to
/// its group algebra via the rescaling.  Throws NotACoalgebraBasis (with the
/// offending b) or CounitZero.
GrouplikeResult grouplikes_from_coalgebra_basis(const FinHopf& h, const Mat& basis);

/// Same conclusion under the hypotheses of the unit-in-basis proposition:
/// basis Phi-set theoretic and containing the unit vector.
GrouplikeResult unit_in_basis_consequence(const FinHopf& h, const Mat& basis);

FinHopf tensor_hopf(const FinHopf& a, const FinHopf& b);

FinHopf group_algebra(const FiniteGroup& g);
FinHopf dual_group_algebra(const FiniteGroup& g);
FinHopf trivial_hopf();

/// Antipode of a bialgebra as the convolution inverse of the identity, if
/// one exists (exact linear solve + two-sided validation).
std::optional<Mat> solve_antipode(const FinHopf& h);

/// The right-monomial identities of a Phi-set theoretic basis, as exact
/// vector identities in H:
///   (i)   b c = eps(psi_c(b)) (c o b)
///   (ii)  eps(c) b = eps(c o b) psi_c(b)
///   (iii) Delta(b) = sum_c lambda_c psi_c(b) (x) (c o b)  with 1 = sum lambda_c c,
///         and its eps-rewritten form whenever eps(c o b) != 0 for lambda_c != 0
///   (iv)  S(psi_c(b)) (c o b) = eps(b) c  and
///         eps(c) S(b) (c o b) = eps(c o b) eps(b) c
AxiomReport right_monomial_check(const FinHopf& h, const Mat& basis);

}  // namespace pentagon
