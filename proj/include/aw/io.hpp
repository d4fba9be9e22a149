#pragma once

#include <json.hpp>

#include "aw/awpoly.hpp"
#include "aw/classify.hpp"
#include "aw/leonard.hpp"
#include "aw/qgroups.hpp"

namespace aw {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [row-major scalar strings]}.
Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// {"n", "q", "a", "b", "c"} plus "lambda" when set.
Json to_json(const ModuleParams& p);
ModuleParams params_from_json(const Json& j);

/// {"A", "B", "C", "q"} plus "central" and "window".
Json to_json(const DeltaRep& r);
DeltaRep deltarep_from_json(const Json& j);

/// {"coeffs": [ascending scalar strings]}.
Json to_json(const Polynomial& p);

Json to_json(const RelationReport& r);
Json to_json(const GroupElem24& g);
/// Parses "(s0,s1,w)" with w one of 1, s, t, st, ts, sts.
GroupElem24 parse_group_element(const std::string& text);
Json to_json(const Basis24& b);
Json to_json(const RecognitionResult& r);
Json to_json(const LeonardReport& r);
Json to_json(const UnitaryReport& r);
Json to_json(const Uqsl2Rep& r);
Json to_json(const Realization& r);
Json to_json(const CGDecomposition& d);
Json to_json(const RacahData& r);
Json to_json(const So3Report& r);

}  // namespace aw
