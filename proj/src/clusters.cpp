#include "agcvg/clusters.hpp"

#include <algorithm>
#include <sstream>

#include "agcvg/errors.hpp"

namespace agcvg {

std::vector<PathCluster> cluster_path(const CoveragePath& path, double budget_m) {
    if (!(budget_m > 0.0)) {
        std::ostringstream msg;
        msg << "per-charge travel budget is " << budget_m
            << " m; the battery cannot sustain any coverage segment";
        throw InfeasibleError(msg.str(), budget_m);
    }
    if (path.empty()) throw ValidationError("cannot cluster an empty path");

    std::vector<PathCluster> clusters;
    auto open_cluster = [&](const Point2& at) {
        PathCluster c;
        c.id = static_cast<int>(clusters.size());
        c.role = path.role;
        c.waypoints.push_back(at);
        clusters.push_back(std::move(c));
    };

    open_cluster(path.waypoints.front());
    double used = 0.0;
    std::size_t i = 0;            // index of the last consumed parent waypoint
    Point2 pos = path.waypoints.front();
    while (i + 1 < path.size()) {
        const Point2& next = path.waypoints[i + 1];
        const bool transit = path.segment_transit.empty() ? false : path.segment_transit[i] != 0;
        const double leg = distance(pos, next);
        if (used + leg <= budget_m + 1e-12) {
            auto& c = clusters.back();
            if (!(c.waypoints.back() == next)) {
                c.segment_transit.push_back(transit ? 1 : 0);
                c.waypoints.push_back(next);
            }
            used += leg;
            pos = next;
            ++i;
        } else if (clusters.back().waypoints.size() > 1 || used > 0.0) {
            // Cut at the last waypoint that still fits; the leg moves whole
            // into the next cluster.
            clusters.back().length_m = used;
            open_cluster(pos);
            used = 0.0;
        } else {
            // First leg of a fresh cluster exceeds the whole budget: split it
            // at an interpolated point exactly budget_m along.
            const Point2 cut = lerp(pos, next, budget_m / leg);
            auto& c = clusters.back();
            c.segment_transit.push_back(transit ? 1 : 0);
            c.waypoints.push_back(cut);
            c.length_m = budget_m;
            open_cluster(cut);
            used = 0.0;
            pos = cut;
        }
    }
    clusters.back().length_m = used;
    return clusters;
}

BipartiteCosts build_cluster_costs(const std::vector<PathCluster>& aerial,
                                   const std::vector<PathCluster>& ground, double nu_a) {
    if (aerial.empty() || ground.empty())
        throw ValidationError("cluster cost matrix needs non-empty cluster lists");
    if (!(nu_a > 0.0)) throw ValidationError("aerial speed must be positive");
    BipartiteCosts costs;
    costs.left_size = static_cast<int>(aerial.size());
    costs.right_size = static_cast<int>(ground.size());
    costs.unit = "s";
    costs.cost.resize(aerial.size() * ground.size());
    for (std::size_t i = 0; i < aerial.size(); ++i)
        for (std::size_t j = 0; j < ground.size(); ++j) {
            const double d = std::min({distance(aerial[i].start(), ground[j].start()),
                                       distance(aerial[i].start(), ground[j].end()),
                                       distance(aerial[i].end(), ground[j].start()),
                                       distance(aerial[i].end(), ground[j].end())});
            costs.cost[i * ground.size() + j] = d / nu_a;
        }
    return costs;
}

Assignment match_clusters(const std::vector<PathCluster>& aerial,
                          const std::vector<PathCluster>& ground, double nu_a) {
    return min_cost_matching(build_cluster_costs(aerial, ground, nu_a));
}

}  // namespace agcvg
