#pragma once

#include <json.hpp>

#include "exch/exchangeable.hpp"
#include "exch/orbits.hpp"
#include "exch/stat_tests.hpp"

namespace exch {

using Json = nlohmann::ordered_json;

/// {"kind":"sequence","length":n,"alphabet":[...]} |
/// {"kind":"array","rows":m,"cols":n,"alphabet":[...]} |
/// {"kind":"blocked","blocks":[{"length":n,"alphabet":[...]},...]}
Json space_to_json(const StateSpace& space);
StateSpace space_from_json(const Json& j);

/// {"space": {...}, "mass": {"<state>": "p/q", ...}} with states as
/// comma-separated symbols (blocks joined by ';'), in enumeration order.
Json distribution_to_json(const FiniteDistribution& P);
FiniteDistribution distribution_from_json(const Json& j);

/// {"kind":"joint_row_col","m":3,"alphabet":[0,1]} and friends.
Json action_to_json(const GroupAction& action);
GroupAction action_from_json(const Json& j);

/// [{"representative":"0,0","size":1,"members":["0,0"]}, ...]
Json orbit_table_to_json(const OrbitTable& table, bool include_members = true);

Json mixing_measure_to_json(const MixingMeasure& mu);

/// Sample files are JSON lists of state strings; repeated states are
/// allowed and accumulate.
Json samples_to_json(const SampleSet& samples);
SampleSet samples_from_json(const Json& j, const StateSpace& space);

Json load_json_file(const std::string& path);

} // namespace exch
