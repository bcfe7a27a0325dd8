#include "agcvg/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "agcvg/arc.hpp"
#include "agcvg/bcd.hpp"
#include "agcvg/errors.hpp"

namespace agcvg {

const char* strategy_name(Strategy s) { return s == Strategy::agcvg ? "agcvg" : "greedy"; }

const char* budget_formula_name(BudgetFormula f) {
    return f == BudgetFormula::T_minus_2tmax ? "T_minus_2tmax" : "T_minus_tmax";
}

double plan_overhead(const RendezvousPlan& plan) {
    if (!(plan.L1_m > 0.0)) return 0.0;
    return (plan.L1_m - plan.L2_m) / plan.L1_m;
}

namespace {

std::vector<double> cluster_end_arcs(const std::vector<PathCluster>& clusters) {
    std::vector<double> arcs(clusters.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        acc += clusters[i].length_m;
        arcs[i] = acc;
    }
    return arcs;
}

// Shared sortie scheduling and assembly. Both vehicles leave a rendezvous
// when the recharge ends; the UGV then drives toward the next event site at
// constant speed and the UAV either rides docked until the takeoff arc or
// lifts off immediately. Per-sortie energy = flight time plus hover at the
// site while the UGV is still driving.
struct Assembler {
    RendezvousPlan& plan;
    const ArcWalker& garc;
    double nu_a, nu_g;
    double charge_s;         // usable flight seconds per charge
    double recharge_s;

    double prev_recharge_end = 0.0;
    double prev_site_arc = 0.0;
    Point2 prev_pos;

    Point2 takeoff_pos(double takeoff_arc) const {
        return takeoff_arc > prev_site_arc + 1e-12 ? garc.at(takeoff_arc) : prev_pos;
    }

    // UGV clock at an arc it passes while driving toward the current site.
    double ugv_time_at(double arc) const {
        return prev_recharge_end + std::max(0.0, arc - prev_site_arc) / nu_g;
    }

    void emit(const std::vector<Point2>& cw, const std::vector<std::uint8_t>& cmarks,
              int cluster_id, bool reversed, double takeoff_arc, const Point2& site,
              double site_arc, int ground_cluster, bool is_static) {
        UavSortie s;
        s.aerial_cluster = cluster_id;
        s.reversed = reversed;
        s.takeoff_arc_m = takeoff_arc;

        Point2 off = prev_pos;
        if (takeoff_arc > prev_site_arc + 1e-12) {
            s.ride_in = garc.slice(prev_site_arc, takeoff_arc);
            off = s.ride_in.back();
        }

        auto push = [&s](const Point2& p, int transit) {
            if (!s.flight.empty() && s.flight.back() == p) return;
            if (!s.flight.empty()) s.flight_transit.push_back(transit ? 1 : 0);
            s.flight.push_back(p);
        };
        push(off, 1);
        push(cw.front(), 1);
        s.cover_begin = static_cast<int>(s.flight.size()) - 1;
        for (std::size_t i = 1; i < cw.size(); ++i)
            push(cw[i], cmarks.empty() ? 0 : cmarks[i - 1]);
        s.cover_end = static_cast<int>(s.flight.size()) - 1;
        push(site, 1);
        s.flight_length_m = polyline_length(s.flight);

        const double takeoff = std::max(prev_recharge_end, ugv_time_at(takeoff_arc));
        const double flight_time = s.flight_length_m / nu_a;
        const double aerial_arrival = takeoff + flight_time;
        const double ground_arrival = ugv_time_at(site_arc);
        const double meet = std::max(aerial_arrival, ground_arrival);
        const double hover = meet - aerial_arrival;
        if (flight_time + hover > charge_s + 1e-9) {
            std::ostringstream msg;
            msg << "sortie " << plan.sorties.size() + 1 << " (aerial cluster " << cluster_id
                << "): " << s.flight_length_m << " m of flight plus " << hover
                << " s hovering at the rendezvous needs " << flight_time + hover
                << " s of charge, but one charge holds " << charge_s << " s";
            throw InfeasibleError(msg.str(), plan.aerial_budget_m);
        }

        RendezvousEvent ev;
        ev.location = site;
        ev.aerial_arrival_s = aerial_arrival;
        ev.ground_arrival_s = ground_arrival;
        ev.wait_s = std::abs(aerial_arrival - ground_arrival);
        ev.recharge_index = static_cast<int>(plan.events.size()) + 1;
        ev.ground_cluster = ground_cluster;
        ev.is_static = is_static;
        ev.ground_arc_m = site_arc;
        plan.events.push_back(ev);

        auto append_aerial = [this](const Point2& p, int transit) {
            auto& path = plan.aerial;
            if (!path.waypoints.empty() && path.waypoints.back() == p) return;
            if (!path.waypoints.empty()) path.segment_transit.push_back(transit ? 1 : 0);
            path.waypoints.push_back(p);
        };
        for (const auto& p : s.ride_in) append_aerial(p, 1);
        for (std::size_t i = 0; i < s.flight.size(); ++i)
            append_aerial(s.flight[i], i == 0 ? 1 : s.flight_transit[i - 1]);

        prev_recharge_end = meet + recharge_s;
        prev_site_arc = site_arc;
        prev_pos = site;
        plan.sorties.push_back(std::move(s));
    }
};

std::pair<std::vector<Point2>, std::vector<std::uint8_t>> oriented(const PathCluster& c,
                                                                   bool reversed) {
    if (!reversed) return {c.waypoints, c.segment_transit};
    std::vector<Point2> w(c.waypoints.rbegin(), c.waypoints.rend());
    std::vector<std::uint8_t> m(c.segment_transit.rbegin(), c.segment_transit.rend());
    return {std::move(w), std::move(m)};
}

void assemble_agcvg(Assembler& as, const std::vector<PathCluster>& vca,
                    const std::vector<PathCluster>& vcg, const Assignment& matching,
                    const std::vector<double>& end_arc) {
    std::vector<int> a_of_g(vcg.size(), -1);
    std::vector<char> matched(vca.size(), 0);
    for (const auto& [ai, gi] : matching.pairs) {
        a_of_g[gi] = ai;
        matched[ai] = 1;
    }

    for (std::size_t g = 0; g < vcg.size(); ++g) {
        const int ai = a_of_g[g];
        if (ai < 0) continue;  // unmatched ground cluster: the UAV rides through it
        const double takeoff_arc = g == 0 ? 0.0 : end_arc[g - 1];
        const Point2 off = as.takeoff_pos(takeoff_arc);
        const auto& cluster = vca[ai];
        const bool rev =
            distance(off, cluster.end()) + 1e-12 < distance(off, cluster.start());
        const auto [cw, cm] = oriented(cluster, rev);
        as.emit(cw, cm, cluster.id, rev, takeoff_arc, vcg[g].end(), end_arc[g],
                static_cast<int>(g), false);
    }

    // Surplus aerial clusters recharge at the parked UGV, nearest first.
    const Point2 home = vcg.back().end();
    const double home_arc = end_arc.back();
    std::vector<int> surplus;
    for (std::size_t i = 0; i < vca.size(); ++i)
        if (!matched[i]) surplus.push_back(static_cast<int>(i));
    while (!surplus.empty()) {
        std::size_t pick = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < surplus.size(); ++k) {
            const auto& c = vca[surplus[k]];
            const double d = std::min(distance(home, c.start()), distance(home, c.end()));
            if (d < best) {
                best = d;
                pick = k;
            }
        }
        const auto& cluster = vca[surplus[pick]];
        const bool rev =
            distance(home, cluster.end()) + 1e-12 < distance(home, cluster.start());
        const auto [cw, cm] = oriented(cluster, rev);
        as.emit(cw, cm, cluster.id, rev, home_arc, home, home_arc,
                static_cast<int>(vcg.size()) - 1, true);
        surplus.erase(surplus.begin() + pick);
    }
}

void assemble_greedy(Assembler& as, const std::vector<PathCluster>& vca,
                     const std::vector<PathCluster>& vcg, const std::vector<double>& end_arc) {
    const double total_arc = end_arc.back();
    for (const auto& cluster : vca) {
        // The UAV heads for the closest ground cluster endpoint the UGV has
        // not yet driven past when the detour starts, and returns to the same
        // spot afterward (the next cluster starts where this one ended).
        const double depart =
            as.prev_recharge_end +
            (distance(as.prev_pos, cluster.start()) + cluster.length_m) / as.nu_a;
        const double ugv_arc = std::min(
            total_arc, as.prev_site_arc + (depart - as.prev_recharge_end) * as.nu_g);
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < vcg.size(); ++j) {
            if (end_arc[j] + 1e-9 < ugv_arc) continue;
            const double d = distance(cluster.end(), vcg[j].end());
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        as.emit(cluster.waypoints, cluster.segment_transit, cluster.id, false,
                as.prev_site_arc, vcg[best].end(), end_arc[best], best, false);
    }
}

}  // namespace

RendezvousPlan plan_route(const Scenario& sc, Strategy strategy, const PlanConfig& config) {
    CoveragePath pa = plan_coverage(sc.map, sc.aerial_region, sc.aerial.footprint_m, Role::aerial);
    CoveragePath pg = plan_coverage(sc.map, sc.ground_region, sc.ground.footprint_m, Role::ground);

    const double nu_a = sc.aerial.speed_mps;
    const double nu_g = sc.ground.speed_mps;
    const double t_max = rendezvous_bound(pa, pg, nu_a, config.tmax_mode);
    const double charge_s = sc.energy.endurance_s - sc.energy.takeoff_s - sc.energy.landing_s;
    const double margin = config.budget_formula == BudgetFormula::T_minus_2tmax ? 2.0 : 1.0;

    RendezvousPlan plan;
    plan.strategy = strategy;
    plan.config = config;
    plan.t_max_s = t_max;
    plan.aerial_budget_m = (charge_s - margin * t_max) * nu_a;
    plan.ground_budget_m = sc.energy.endurance_s * nu_g;
    plan.L2_m = pa.total_length_m;

    plan.aerial_clusters = cluster_path(pa, plan.aerial_budget_m);
    plan.ground_clusters = cluster_path(pg, plan.ground_budget_m);
    plan.ground = std::move(pg);
    plan.aerial.role = Role::aerial;

    const ArcWalker garc(plan.ground.waypoints);
    const auto end_arc = cluster_end_arcs(plan.ground_clusters);
    Assembler as{plan,  garc, nu_a, nu_g, charge_s, config.recharge_s, 0.0, 0.0,
                 plan.ground.waypoints.front()};

    if (strategy == Strategy::agcvg) {
        const auto matching = match_clusters(plan.aerial_clusters, plan.ground_clusters, nu_a);
        assemble_agcvg(as, plan.aerial_clusters, plan.ground_clusters, matching, end_arc);
    } else {
        assemble_greedy(as, plan.aerial_clusters, plan.ground_clusters, end_arc);
    }

    plan.aerial.total_length_m = polyline_length(plan.aerial.waypoints);
    plan.L1_m = plan.aerial.total_length_m;
    return plan;
}

RendezvousPlan plan_agcvg(const Scenario& sc, const PlanConfig& config) {
    return plan_route(sc, Strategy::agcvg, config);
}

RendezvousPlan plan_greedy(const Scenario& sc, const PlanConfig& config) {
    return plan_route(sc, Strategy::greedy, config);
}

}  // namespace agcvg
