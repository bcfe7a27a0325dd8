#include "agcvg/metrics.hpp"

#include "agcvg/errors.hpp"

namespace agcvg {

MissionMetrics compute_metrics(const RendezvousPlan& plan, const Timeline& timeline,
                               const Scenario& sc) {
    MissionMetrics m;
    m.overhead = plan_overhead(plan);
    for (const auto& ev : timeline.events) m.total_wait_s += ev.wait_s;
    m.n_rendezvous = static_cast<int>(timeline.events.size());
    m.L1_m = plan.L1_m;
    m.L2_m = plan.L2_m;
    m.coverage_aerial =
        verify_coverage(plan.aerial, sc.map, sc.aerial_region, sc.aerial.footprint_m);
    m.coverage_ground =
        verify_coverage(plan.ground, sc.map, sc.ground_region, sc.ground.footprint_m);
    m.mission_time_s = timeline.mission_time_s;
    return m;
}

namespace {

StrategyOutcome run_one(const Scenario& sc, Strategy strategy, const PlanConfig& config) {
    StrategyOutcome out;
    try {
        const RendezvousPlan plan = plan_route(sc, strategy, config);
        const Timeline tl = simulate(plan, sc);
        out.metrics = compute_metrics(plan, tl, sc);
        out.feasible = true;
    } catch (const InfeasibleError& e) {
        out.error = e.what();
    } catch (const SimulationError& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

ComparisonRecord compare_strategies(const Scenario& sc, const PlanConfig& config) {
    ComparisonRecord rec;
    rec.scenario = sc.name;
    rec.agcvg = run_one(sc, Strategy::agcvg, config);
    rec.greedy = run_one(sc, Strategy::greedy, config);
    if (rec.agcvg.feasible && rec.greedy.feasible)
        rec.gap_pp = (rec.greedy.metrics.overhead - rec.agcvg.metrics.overhead) * 100.0;
    return rec;
}

}  // namespace agcvg
