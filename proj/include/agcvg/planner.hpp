#pragma once

#include <string>
#include <vector>

#include "agcvg/clusters.hpp"
#include "agcvg/scenario.hpp"

namespace agcvg {

enum class Strategy { agcvg, greedy };
enum class BudgetFormula { T_minus_2tmax, T_minus_tmax };

const char* strategy_name(Strategy s);
const char* budget_formula_name(BudgetFormula f);

struct PlanConfig {
    TmaxMode tmax_mode = TmaxMode::nearest;
    BudgetFormula budget_formula = BudgetFormula::T_minus_2tmax;
    double recharge_s = 0.0;
};

// One recharge meeting. Times are the planner's schedule; the simulator
// recomputes them independently. ground_arrival is clamped to the end of the
// previous recharge when the UGV is already parked at the site.
struct RendezvousEvent {
    Point2 location;
    double aerial_arrival_s = 0.0;
    double ground_arrival_s = 0.0;
    double wait_s = 0.0;          // |aerial_arrival - ground_arrival|
    int recharge_index = 0;       // 1-based, in mission order
    int ground_cluster = -1;      // cluster whose endpoint hosts the meeting
    bool is_static = false;       // UGV parked at the end of its path
    double ground_arc_m = 0.0;    // site position as arc length along the ground path
};

// One battery charge worth of UAV activity, ending at a rendezvous.
// ride_in is the docked carriage along the ground path before takeoff (empty
// when the UAV lifts off where it recharged). flight is the airborne
// polyline: approach leg, cluster traversal, detour to the event site.
struct UavSortie {
    std::vector<Point2> ride_in;
    std::vector<Point2> flight;
    std::vector<std::uint8_t> flight_transit;  // per flight segment, 1 = detour or approach leg
    int cover_begin = 0;          // inclusive index range of flight traversing the cluster
    int cover_end = 0;
    int aerial_cluster = -1;
    bool reversed = false;        // cluster flown end-to-start
    double takeoff_arc_m = 0.0;   // UAV departs once the UGV reaches this arc and the recharge is done
    double flight_length_m = 0.0;
};

struct RendezvousPlan {
    Strategy strategy = Strategy::agcvg;
    PlanConfig config;
    CoveragePath aerial;   // assembled UAV path: rides + flights, starts at the ground path start
    CoveragePath ground;   // the UGV coverage path, driven start to end
    std::vector<UavSortie> sorties;
    std::vector<RendezvousEvent> events;  // one per sortie, same order
    std::vector<PathCluster> aerial_clusters;
    std::vector<PathCluster> ground_clusters;
    double L1_m = 0.0;            // aerial.total_length_m, detours and rides included
    double L2_m = 0.0;            // coverage-only aerial length, no energy constraint
    double t_max_s = 0.0;
    double aerial_budget_m = 0.0;
    double ground_budget_m = 0.0;
};

// (L1 - L2) / L1; zero for an empty plan.
double plan_overhead(const RendezvousPlan& plan);

RendezvousPlan plan_agcvg(const Scenario& sc, const PlanConfig& config = {});
RendezvousPlan plan_greedy(const Scenario& sc, const PlanConfig& config = {});
RendezvousPlan plan_route(const Scenario& sc, Strategy strategy, const PlanConfig& config = {});

}  // namespace agcvg
