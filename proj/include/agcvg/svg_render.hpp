#pragma once

#include <string>

#include "agcvg/planner.hpp"

namespace agcvg {

// Deterministic SVG of the scenario and (optionally) a plan: obstacles dark,
// aerial mask tinted orange, ground mask tinted blue, UGV path purple, UAV
// path yellow, one numbered circle marker per rendezvous. Fixed 24 px per
// grid cell.
std::string render_svg(const Scenario& sc, const RendezvousPlan* plan);

}  // namespace agcvg
