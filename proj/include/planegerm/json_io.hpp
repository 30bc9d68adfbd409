#pragma once

#include <json.hpp>

#include "planegerm/jet.hpp"

namespace planegerm {

using json = nlohmann::json;

json to_json(const Jet2& j);
Jet2 jet_from_json(const json& v);

json to_json(const PlaneGermJet& f);
PlaneGermJet germ_from_json(const json& v);

json to_json(const CoordChangeJet& ch);
CoordChangeJet change_from_json(const json& v);

// Accepts a JSON string holding a rational, or a JSON integer.
Rat rat_from_json(const json& v);

}  // namespace planegerm
