#include "agcvg/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "agcvg/arc.hpp"
#include "agcvg/errors.hpp"

namespace agcvg {

const char* veh_state_name(VehState s) {
    switch (s) {
        case VehState::covering: return "covering";
        case VehState::transit: return "transit";
        case VehState::waiting: return "waiting";
        case VehState::recharging: return "recharging";
        case VehState::docked: return "docked";
    }
    return "?";
}

namespace {

// One vehicle's clock, position and (for the aerial vehicle) remaining charge.
// Each emitted sample opens a state interval that the next sample closes.
struct Walker {
    std::vector<TimelineSample>& out;
    double t = 0.0;
    Point2 pos;
    double energy = std::numeric_limits<double>::quiet_NaN();
    VehState last = VehState::waiting;

    void emit(VehState st) {
        out.push_back({t, pos, energy, st});
        last = st;
    }

    void exhaust(double into_state_s, const Point2& at) const {
        std::ostringstream msg;
        msg << "aerial charge exhausted " << into_state_s << " s after " << t << " s, at ("
            << at.x << ", " << at.y << ")";
        throw SimulationError(msg.str(), t + into_state_s, at.x, at.y);
    }

    // Straight run to b at speed v. drain: airborne, charge falls 1 s/s.
    void traverse(const Point2& b, double v, VehState st, bool drain) {
        const double d = distance(pos, b);
        if (d <= 0.0) return;
        const double dt = d / v;
        emit(st);
        if (drain) {
            if (energy - dt < -1e-9) exhaust(std::max(energy, 0.0), lerp(pos, b, std::clamp(energy / dt, 0.0, 1.0)));
            energy -= dt;
        }
        t += dt;
        pos = b;
    }

    void dwell(double until, VehState st, bool drain) {
        const double dt = until - t;
        if (dt <= 0.0) return;
        emit(st);
        if (drain) {
            if (energy - dt < -1e-9) exhaust(std::max(energy, 0.0), pos);
            energy -= dt;
        }
        t = until;
    }
};

// Drives the ground vehicle along its coverage path by arc length, emitting a
// sample per traversed path segment so covering/transit stretches stay exact.
struct GroundDrive {
    const ArcWalker& arc;
    const std::vector<std::uint8_t>& marks;
    Walker& w;
    double nu;
    double cur = 0.0;

    void to(double target) {
        target = std::min(std::max(target, cur), arc.total());
        const auto& cum = arc.cum();
        while (cur < target - 1e-12) {
            auto it = std::upper_bound(cum.begin(), cum.end(), cur);
            std::size_t seg = it == cum.end() ? cum.size() - 2 : static_cast<std::size_t>(it - cum.begin()) - 1;
            const double stop = std::min(cum[seg + 1], target);
            const VehState st =
                seg < marks.size() && marks[seg] ? VehState::transit : VehState::covering;
            w.traverse(arc.at(stop), nu, st, false);
            cur = stop;
        }
        cur = target;
    }
};

}  // namespace

Timeline simulate(const RendezvousPlan& plan, const Scenario& sc) {
    if (plan.ground.empty()) throw ValidationError("plan has no ground path");
    const double nu_a = sc.aerial.speed_mps;
    const double nu_g = sc.ground.speed_mps;
    const double full = sc.energy.endurance_s - sc.energy.takeoff_s - sc.energy.landing_s;
    const double recharge_s = plan.config.recharge_s;

    Timeline tl;
    tl.events.reserve(plan.events.size());

    const ArcWalker garc(plan.ground.waypoints);
    Walker wg{tl.ground, 0.0, plan.ground.waypoints.front(),
              std::numeric_limits<double>::quiet_NaN(), VehState::waiting};
    GroundDrive drive{garc, plan.ground.segment_transit, wg, nu_g};

    Walker wa{tl.aerial, 0.0, wg.pos, full, VehState::docked};

    if (plan.sorties.size() != plan.events.size())
        throw ValidationError("plan sorties and rendezvous events disagree");

    for (std::size_t k = 0; k < plan.sorties.size(); ++k) {
        const UavSortie& s = plan.sorties[k];
        const RendezvousEvent& ev = plan.events[k];

        drive.to(ev.ground_arc_m);
        const double ground_arrival = wg.t;

        for (std::size_t i = 1; i < s.ride_in.size(); ++i)
            wa.traverse(s.ride_in[i], nu_g, VehState::docked, false);
        for (std::size_t i = 1; i < s.flight.size(); ++i)
            wa.traverse(s.flight[i], nu_a,
                        s.flight_transit[i - 1] ? VehState::transit : VehState::covering, true);
        const double aerial_arrival = wa.t;

        const double meet = std::max(aerial_arrival, ground_arrival);
        wa.dwell(meet, VehState::waiting, true);  // hover burns charge
        wg.dwell(meet, VehState::waiting, false);
        wa.dwell(meet + recharge_s, VehState::recharging, false);
        wg.dwell(meet + recharge_s, VehState::recharging, false);
        wa.energy = full;

        RendezvousEvent done = ev;
        done.aerial_arrival_s = aerial_arrival;
        done.ground_arrival_s = ground_arrival;
        done.wait_s = std::abs(aerial_arrival - ground_arrival);
        tl.events.push_back(done);
    }

    // Remaining ground coverage with the aerial vehicle riding along.
    const double tail_from = drive.cur;
    drive.to(garc.total());
    if (garc.total() > tail_from + 1e-12) {
        const auto tail = garc.slice(tail_from, garc.total());
        for (std::size_t i = 1; i < tail.size(); ++i)
            wa.traverse(tail[i], nu_g, VehState::docked, false);
    }

    tl.mission_time_s = std::max(wa.t, wg.t);
    wa.dwell(tl.mission_time_s, wa.last == VehState::docked ? VehState::docked : VehState::waiting,
             false);
    wg.dwell(tl.mission_time_s, VehState::waiting, false);
    wa.emit(wa.last);
    wg.emit(wg.last);
    return tl;
}

double verify_coverage(const CoveragePath& path, const GridMap& map, const RegionMask& mask,
                       double footprint_m) {
    const double reach = footprint_m / 2.0 + 1e-9;
    std::size_t total = 0, covered = 0;
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            if (!mask.at(map, c, r) || map.occupied(c, r)) continue;
            ++total;
            const Point2 center = map.cell_center(c, r);
            bool hit = false;
            if (path.waypoints.size() == 1) {
                hit = distance(center, path.waypoints.front()) <= reach;
            } else {
                for (std::size_t i = 1; i < path.waypoints.size() && !hit; ++i)
                    hit = segment_distance(center, path.waypoints[i - 1], path.waypoints[i]) <=
                          reach;
            }
            if (hit) ++covered;
        }
    }
    return total == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(total);
}

}  // namespace agcvg
