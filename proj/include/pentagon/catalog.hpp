#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pentagon/finite_group.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/set_solution.hpp"

namespace pentagon {

/// Bundled objects: every group of order <= 12 by name, the standard example
/// solutions on them, and a few Hopf algebras.  Throws UnknownName.
FiniteGroup catalog_group(const std::string& name);
FiniteSolution catalog_solution(const std::string& name);
FinHopf catalog_hopf(const std::string& name);

std::vector<std::string> catalog_group_names();

/// s(g,h) = (g, gh): the group solution (RPE).
FiniteSolution group_solution(const FiniteGroup& g);
/// s(g,h) = (gh^{-1}, h): the dual solution (RPE).
FiniteSolution dual_group_solution(const FiniteGroup& g);
/// s(g,h) = (gh, h): the PE group solution.
FiniteSolution pe_group_solution(const FiniteGroup& g);

}  // namespace pentagon
