#pragma once

#include <json.hpp>

#include "ospq/invariant.hpp"
#include "ospq/moddata.hpp"
#include "ospq/surgery.hpp"

// vendor/json.hpp provides nlohmann::json; ordered_json keeps emission
// deterministic (sorted construction order is preserved).

namespace ospq {

using Json = nlohmann::ordered_json;

Json to_json(const CycloNumber& v);
CycloNumber cyclo_from_json(const Json& j);

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const ModularTables& t);
ModularTables tables_from_json(const Json& j);

Json to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);

Json to_json(const InvariantReport& r);

}  // namespace ospq
