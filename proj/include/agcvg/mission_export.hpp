#pragma once

#include <string>

#include "agcvg/planner.hpp"

namespace agcvg {

// Field coordinate conventions. ugv_rhr: origin at the UGV start, +Y is the
// vehicle's front (planner +y), +X its left side (planner -x). uav_lhr:
// origin at the UAV launch point (UGV start plus the scenario launch offset,
// expressed in the UGV frame), +X front (planner +y), +Y right side
// (planner +x). The exact matrices are printed in the file header.
enum class Frame { ugv_rhr, uav_lhr };

const char* frame_name(Frame f);

// Waypoint CSV "idx,x_m,y_m,z_m,action" for the vehicle the frame belongs to
// (ugv_rhr exports the ground path, uav_lhr the aerial path). Altitude: 3 m
// while covering or in transit, 1 m at rendezvous rows, 0 m docked or on the
// ground vehicle.
std::string export_mission(const RendezvousPlan& plan, const Scenario& sc, Frame frame);

}  // namespace agcvg
