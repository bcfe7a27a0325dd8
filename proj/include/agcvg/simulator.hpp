#pragma once

#include <vector>

#include "agcvg/planner.hpp"

namespace agcvg {

enum class VehState { covering, transit, waiting, recharging, docked };

const char* veh_state_name(VehState s);

// Timeline breakpoint; position moves linearly at constant speed toward the
// next sample's position. energy_s applies to the aerial vehicle only and is
// NaN for ground samples.
struct TimelineSample {
    double time_s = 0.0;
    Point2 pos;
    double energy_s = 0.0;
    VehState state = VehState::covering;
};

struct Timeline {
    std::vector<TimelineSample> aerial;
    std::vector<TimelineSample> ground;
    std::vector<RendezvousEvent> events;  // realized meeting times and waits
    double mission_time_s = 0.0;
};

// Kinematic execution of a plan on a shared clock. Arrival times, waits and
// energy are derived from the plan geometry and the scenario speeds alone,
// independent of the planner's own schedule. The aerial vehicle drains 1 s of
// charge per second airborne (covering, transit, hovering at a rendezvous),
// none while docked or recharging; a recharge restores endurance minus
// takeoff and landing time. Throws SimulationError on mid-air exhaustion.
Timeline simulate(const RendezvousPlan& plan, const Scenario& sc);

// Fraction of free masked cells whose center lies within footprint_m/2
// (plus 1e-9 slack) of some path segment.
double verify_coverage(const CoveragePath& path, const GridMap& map, const RegionMask& mask,
                       double footprint_m);

}  // namespace agcvg
