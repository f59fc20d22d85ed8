#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pentagon/hopf.hpp"
#include "pentagon/set_solution.hpp"

namespace pentagon {

/// Elements of End(k[S]) are vectors of dim n^2; S_{r,c} sits at r*n + c.
/// Elements of End(k[S]) (x) End(k[S]) are sparse maps keyed by the two
/// flattened S-indices.
using EltAA = std::map<std::pair<int, int>, Cyc>;

Vec elementary_endo(int n, int r, int c);
Vec endo_mul(int n, const Vec& a, const Vec& b);
Vec endo_identity(int n);

EltAA algebra_solution_element(const FiniteSolution& s);          // R = s^A
EltAA algebra_solution_inverse(const FiniteSolution& s);          // (s^A)^{-1}
EltAA mul_aa(int n, const EltAA& x, const EltAA& y);
EltAA tensor_aa(int n, const Vec& a, const Vec& b);               // a (x) b

/// Canonical basis of a coefficient Hopf algebra, on labels (x' in G,
/// y' in Ebar) ordered by (y', x').
struct CoefficientBasis {
  enum class side_t { left, right };
  side_t side;
  std::vector<std::pair<int, int>> labels;  // (x', y')
  std::vector<Vec> vectors;                 // elements of End(k[S])
  int index_of(int x_prime, int y_prime) const;
};

struct CoefficientAlgebra {
  FinHopf hopf;
  CoefficientBasis basis;
  LeftGroupAnalysis analysis;
};

/// The (x', y')-indexed generating families of the left and right
/// coefficient algebras, obtained by slicing s^A with delta functionals.
struct SpanningSets {
  std::vector<Vec> left, right;  // indexed by x'*n + y'
};
SpanningSets spanning_sets(const FiniteSolution& s);

CoefficientAlgebra build_Hr(const FiniteSolution& s);
CoefficientAlgebra build_Hl(const FiniteSolution& s);

struct Coinvariants {
  int dim = 0;
  std::vector<Vec> spanning;
};
Coinvariants coinvariants(const FiniteSolution& s);

/// Conjugation coproduct R(x (x) 1)R^{-1} against the closed-form coproduct,
/// on every canonical basis element of H_r(s).
bool comult_crosscheck(const FiniteSolution& s);

/// The set-theoretic solution induced by Phi on the canonical right basis,
/// computed symbolically from (psi, o, theta).
FiniteSolution canonical_phi_table(const LeftGroupAnalysis& g,
                                   const CoefficientBasis& basis);

/// H_r(s) built purely from the closed combinatorial forms (unit, counit,
/// multiplication, comultiplication, antipode) on the canonical labels;
/// independent of the numeric extraction in build_Hr and asserted equal to
/// it in the test suite.
FinHopf closed_form_Hr(const LeftGroupAnalysis& g, const CoefficientBasis& basis);

struct ReconstructionReport {
  int dim_V = 0, dim_Hr = 0, dim_VH = 0;
  bool dimension_identity = false;
  bool product_attempted = false;
  bool product_equivalent = false;
};
ReconstructionReport reconstruction_identity(const FiniteSolution& s);

}  // namespace pentagon
