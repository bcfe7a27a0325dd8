#pragma once

#include <vector>

#include "agcvg/geometry.hpp"
#include "agcvg/grid_map.hpp"

namespace agcvg {

// True when every cell the segment a-b passes through is free. Exact voxel
// traversal, no sampling.
bool line_of_sight(const GridMap& map, Point2 a, Point2 b);

// Shortest obstacle-free polyline from a to b. 8-connected search over cell
// centers (diagonal cost sqrt(2)*resolution, corner cutting disallowed),
// then shortcut smoothing with exact visibility checks. Endpoints are kept
// verbatim. Throws ValidationError when no free-cell route exists.
std::vector<Point2> grid_shortest_path(const GridMap& map, Point2 a, Point2 b);

// Length of grid_shortest_path(a, b). Used as a transit cost.
double grid_path_length(const GridMap& map, Point2 a, Point2 b);

}  // namespace agcvg
