#pragma once

#include "pentagon/linalg.hpp"
#include "pentagon/set_solution.hpp"

namespace pentagon {

/// An endomorphism of V (x) V as a d^2 x d^2 matrix; column (i*d+j) is the
/// image of e_i (x) e_j.
struct LinearSolution {
  int d = 0;
  eq_tag tag = eq_tag::none;
  Mat mat;
};

LinearSolution linearise(const FiniteSolution& s);

/// Solution on functions k^S (x) k^S in the delta basis; swaps PE and RPE.
LinearSolution pullback(const FiniteSolution& s);

bool verify_linear(const LinearSolution& f, eq_tag eq);
SolutionFlags linear_flags(const LinearSolution& f);

/// R = sum alpha_{kl}^{th} S_{kt} (x) S_{lh} in End(V) (x) End(V),
/// keyed {k, t, l, h}.
struct AlgebraSolution {
  int d = 0;
  long m = 1;
  eq_tag tag = eq_tag::none;
  std::map<std::array<int, 4>, Cyc> r;
};

AlgebraSolution to_algebra_element(const LinearSolution& f);
LinearSolution phi2(const AlgebraSolution& alg);  // the defining inverse map
bool verify_algebra_equation(const AlgebraSolution& alg, eq_tag eq);
SolutionFlags algebra_flags(const AlgebraSolution& alg);

}  // namespace pentagon
