#pragma once

#include <cstdint>
#include <vector>

#include "agcvg/geometry.hpp"
#include "agcvg/scenario.hpp"

namespace agcvg {

// Ordered waypoint polyline covering one vehicle's region. segment_transit[i]
// marks the segment waypoints[i] -> waypoints[i+1]: 1 = inter-cell transit,
// 0 = coverage motion (lawnmower pass or in-cell connector).
struct CoveragePath {
    Role role = Role::aerial;
    std::vector<Point2> waypoints;
    std::vector<std::uint8_t> segment_transit;
    double total_length_m = 0.0;

    std::size_t size() const { return waypoints.size(); }
    bool empty() const { return waypoints.empty(); }
};

// Recomputes total_length_m from the waypoints (invariant check helper).
double path_length(const CoveragePath& path);

}  // namespace agcvg
