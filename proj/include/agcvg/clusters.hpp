#pragma once

#include <vector>

#include "agcvg/assignment.hpp"
#include "agcvg/coverage.hpp"

namespace agcvg {

// Contiguous slice of a coverage path short enough for one battery charge.
// Consecutive clusters share their boundary waypoint; concatenating all
// clusters (dropping the duplicated boundaries) reproduces the parent path,
// with interpolated waypoints inserted where a single leg had to be split.
struct PathCluster {
    int id = 0;
    Role role = Role::aerial;
    std::vector<Point2> waypoints;
    std::vector<std::uint8_t> segment_transit;  // per segment, as in CoveragePath
    double length_m = 0.0;

    const Point2& start() const { return waypoints.front(); }
    const Point2& end() const { return waypoints.back(); }
};

// Greedy arc-length segmentation: accumulate legs, cut at the last waypoint
// that still fits budget_m, splitting a leg by interpolation only when the
// leg alone exceeds the remaining budget of a fresh cluster. Throws
// InfeasibleError (carrying the budget) when budget_m <= 0.
std::vector<PathCluster> cluster_path(const CoveragePath& path, double budget_m);

// cost[i][j] = min over the four terminal pairings {start,end} x {start,end}
// of Euclidean distance between aerial cluster i and ground cluster j, over
// nu_a, in seconds.
BipartiteCosts build_cluster_costs(const std::vector<PathCluster>& aerial,
                                   const std::vector<PathCluster>& ground, double nu_a);

// Min-cost maximum-cardinality matching over build_cluster_costs.
Assignment match_clusters(const std::vector<PathCluster>& aerial,
                          const std::vector<PathCluster>& ground, double nu_a);

}  // namespace agcvg
