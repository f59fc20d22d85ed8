#pragma once

#include <string>

#include "json.hpp"
#include "pentagon/conversions.hpp"
#include "pentagon/finite_group.hpp"
#include "pentagon/group_constructions.hpp"
#include "pentagon/hopf.hpp"
#include "pentagon/linalg.hpp"
#include "pentagon/set_solution.hpp"

namespace pentagon {

using json = nlohmann::json;

// Integers are carried as decimal strings so arbitrary precision survives.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Cyc& c);            // {"m": int, "c": [[num, den], ...]}
Cyc cyc_from_json(const json& j);

json to_json(const Vec& v);            // {"dim", "m", "e": [Cyc...]}
Vec vec_from_json(const json& j);

json to_json(const Mat& a);            // {"rows", "cols", "m", "nz": [[i, j, Cyc]...]}
Mat mat_from_json(const json& j);

json to_json(const Tensor3& t);        // {"d", "m", "nz": [[i, j, k, Cyc]...]}
Tensor3 tensor_from_json(const json& j);

json to_json(const FiniteSolution& s); // {"n", "map": [[x, y, x2, y2]...], "equation"}
FiniteSolution solution_from_json(const json& j);

json to_json(const FiniteGroup& g);    // {"n", "cayley": [[...]]}
FiniteGroup group_from_json(const json& j);

json to_json(const MatchedPairGroups& mp);  // adds "lact"/"ract" to the groups
MatchedPairGroups matched_pair_from_json(const json& j);

json to_json(const FinHopf& h);
FinHopf hopf_from_json(const json& j);

}  // namespace pentagon
