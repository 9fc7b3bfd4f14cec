#pragma once

// JSON forms of the public value types.  Objects serialize with sorted keys
// (the library's default), so emit -> parse -> emit is byte-stable.
//
//   polygon:  [[m,n], ...] in canonical descending-slope order
//   witness:  {"after","before","p_cycles","q_after","q_before","swap_index"}
//             with swap_index 1-based in JSON (0-based in MoveWitness)
//   chain:    {"zeta","xi","c","method","words","steps"}
//   report:   {"campaign","params","instances","passes","failures","counts",
//              "counterexamples","suppressed","wall_seconds","ok"}

#include <json.hpp>

#include "dm1/campaigns.hpp"
#include "dm1/moves.hpp"
#include "dm1/newton.hpp"
#include "dm1/specialization.hpp"

namespace dm1 {

using Json = nlohmann::json;

Json np_to_json(const NewtonPolygon& np);
NewtonPolygon np_from_json(const Json& j);

Json witness_to_json(const MoveWitness& mw);
MoveWitness witness_from_json(const Json& j);

Json chain_to_json(const Chain& ch);
Chain chain_from_json(const Json& j);

Json report_to_json(const Report& r);

}  // namespace dm1
