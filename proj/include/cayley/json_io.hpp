#pragma once

#include <string>

#include <json.hpp>

#include "cayley/crosswired.hpp"
#include "cayley/group.hpp"
#include "cayley/laurent.hpp"
#include "cayley/laurent_rep.hpp"
#include "cayley/mealy.hpp"
#include "cayley/normal_form.hpp"
#include "cayley/tree_action.hpp"

namespace cayley {

using json = nlohmann::json;

/// Builds a group from a spec object:
///   {"kind":"named","name":"q8"|"d8"}
///   {"kind":"modular","n":4}
///   {"kind":"cyclic","m":6}
///   {"kind":"product","factors":[<spec>, ...]}
///   {"kind":"table","names":[...],"table":[[...], ...]}
/// Throws std::invalid_argument on malformed specs or invalid tables.
GroupTable group_from_json(const json& spec);

/// Resolves a --group argument: a short name ("q8", "d8", "m8".."m64" for the
/// modular groups of that order, "cN" for cyclic) or a path to a spec file.
GroupTable group_from_arg(const std::string& arg);

json to_json(const GroupTable& g, const StructuralReport& r);

/// {"states":[...], "alphabet":[...], "transition":[[...]], "output":[[...]]}
json to_json(const MealyMachine& m);
MealyMachine machine_from_json(const json& j);

/// {"x_exp": int, "factors": [[level, "name"], ...]}
json to_json(const GroupTable& g, const NormalForm& p);
NormalForm nf_from_json(const GroupTable& g, const json& j);

/// {"min_exp": int, "bits": "0101..."}; bit i is the coefficient of
/// t^(min_exp + i). The zero polynomial is {"min_exp": 0, "bits": ""}.
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

/// {"dim": n, "entries": [[<poly>, ...], ...]} row-major.
json to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const json& j);

json to_json(const PresentationReport& r);
json to_json(const FreeSemigroupReport& r);
json to_json(const GroupTable& g, const ConsistencyReport& r);
json to_json(const RepReport& r);
json to_json(const GroupTable& g, const IndexReport& r);
json to_json(const IntersectionReport& r);
json to_json(const DoubleCosetReport& r);
json to_json(const IncreasingUnionReport& r);

}  // namespace cayley
