#pragma once

#include <vector>

#include "agcvg/coverage.hpp"

namespace agcvg {

struct BipartiteCosts {
    int left_size = 0;
    int right_size = 0;
    std::vector<double> cost;  // row-major, left_size x right_size, finite, >= 0
    const char* unit = "m";    // "m" or "s"

    double at(int i, int j) const { return cost[static_cast<std::size_t>(i) * right_size + j]; }
};

struct Assignment {
    std::vector<std::pair<int, int>> pairs;  // (left, right), a matching
    double total_cost = 0.0;
    double max_edge_cost = 0.0;
};

// Pairwise xy distances between the two paths' waypoints. When cardinalities
// differ the larger path is down-sampled to the smaller one's count with
// evenly spaced indices round(i*(M-1)/(m-1)), keeping both endpoints, so the
// matrix is always square.
BipartiteCosts build_waypoint_costs(const CoveragePath& path_a, const CoveragePath& path_g);

// Exact minimum-total-cost maximum-cardinality matching (O(n^2 m) potentials
// method). |pairs| = min(left_size, right_size).
Assignment min_cost_matching(const BipartiteCosts& costs);

// Exact maximum-cardinality matching minimizing the largest matched edge.
// Binary search over the distinct costs with augmenting-path matchings.
Assignment bottleneck_matching(const BipartiteCosts& costs);

enum class TmaxMode { nearest, bottleneck, min_cost_max_edge };

const char* tmax_mode_name(TmaxMode m);

// Worst-case one-way rendezvous time bound. nearest: max over aerial
// waypoints of the distance to the closest ground waypoint, over nu_a.
// Matching modes use the respective matching's max edge instead.
double rendezvous_bound(const CoveragePath& path_a, const CoveragePath& path_g, double nu_a,
                        TmaxMode mode);

}  // namespace agcvg
