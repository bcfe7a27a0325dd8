#pragma once

#include <string>

#include "agcvg/simulator.hpp"

namespace agcvg {

struct MissionMetrics {
    double overhead = 0.0;        // (L1 - L2) / L1
    double total_wait_s = 0.0;    // summed over events
    int n_rendezvous = 0;
    double L1_m = 0.0;
    double L2_m = 0.0;
    double coverage_aerial = 0.0;
    double coverage_ground = 0.0;
    double mission_time_s = 0.0;
};

MissionMetrics compute_metrics(const RendezvousPlan& plan, const Timeline& timeline,
                               const Scenario& sc);

struct StrategyOutcome {
    bool feasible = false;
    std::string error;      // set when infeasible
    MissionMetrics metrics; // valid when feasible
};

// Both strategies end to end on one scenario. Infeasibility is recorded in
// the outcome instead of propagating, so batches keep going.
struct ComparisonRecord {
    std::string scenario;
    StrategyOutcome agcvg;
    StrategyOutcome greedy;
    double gap_pp = 0.0;  // (greedy.overhead - agcvg.overhead) * 100, when both feasible
};

ComparisonRecord compare_strategies(const Scenario& sc, const PlanConfig& config = {});

}  // namespace agcvg
