#pragma once

#include <string>

#include "agcvg/grid_map.hpp"

namespace agcvg {

enum class Role { aerial, ground };

const char* role_name(Role r);

struct VehicleParams {
    Role role = Role::aerial;
    double footprint_m = 0.0;  // swath width covered by one pass
    double speed_mps = 0.0;
};

struct EnergyModel {
    double endurance_s = 0.0;  // full-charge flight time T, includes takeoff and landing
    double takeoff_s = 0.0;
    double landing_s = 0.0;
};

// One planning problem: the environment, per-vehicle coverage regions and
// motion parameters, the aerial energy model, and the UAV launch offset
// (UGV-frame position of the UAV origin, used by mission export).
struct Scenario {
    GridMap map;
    RegionMask aerial_region;
    RegionMask ground_region;
    VehicleParams aerial;
    VehicleParams ground;
    EnergyModel energy;
    Point2 launch_offset_m;
    std::string name;
};

// Grid characters: '.' free, '#' obstacle, 'A' aerial-region cell,
// 'G' ground-region cell, 'B' cell in both regions. The first grid string is
// the TOP row of the map (row index height-1).
Scenario parse_scenario(const std::string& json_text, const std::string& name = "");
Scenario load_scenario(const std::string& path);
std::string scenario_to_json(const Scenario& sc);
void save_scenario(const Scenario& sc, const std::string& path);

}  // namespace agcvg
