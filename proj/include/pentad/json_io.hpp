#pragma once

#include "pentad/closure.hpp"

#include <json.hpp>

#include <string>

namespace pentad {

using Json = nlohmann::ordered_json;

Json rank_matrix_json(const RankMatrix& phi);
RankMatrix rank_matrix_from_json(const Json& j);

Json splitting_json(const Splitting& s);
Json orbit_class_json(const OrbitClass& o);
Json closure_description_json(const ClosureDescription& d);
Json catalogue_json();
Json config_json(const ProjConfig& v);

// ConfigFile: {"n":4,"m":5,"points":[[..n rationals..] x m]}; entries are
// integers or "a/b" strings, decimals rejected.
ProjConfig parse_config_text(const std::string& text);
ProjConfig parse_config_file(const std::string& path);

} // namespace pentad
