#pragma once

#include <vector>

#include "agcvg/coverage.hpp"
#include "agcvg/grid_map.hpp"

namespace agcvg {

// One boustrophedon cell: a maximal rectangular run of columns whose free
// masked row interval is identical across the run. Row intervals that merely
// overlap start a new cell, which keeps every cell an axis-aligned rectangle.
struct BcdCell {
    int id = 0;
    int col_lo = 0, col_hi = 0;  // inclusive
    int row_lo = 0, row_hi = 0;  // inclusive, shared by every column in the run
    std::vector<int> neighbors;  // ids of horizontally adjacent cells with overlapping rows

    int width_cells() const { return col_hi - col_lo + 1; }
    int height_cells() const { return row_hi - row_lo + 1; }
};

// Vertical lawnmower pass at fixed x; y endpoints are outermost cell centers.
struct Pass {
    double x_m = 0.0;
    double y_lo_m = 0.0;
    double y_hi_m = 0.0;
};

// Entry corner of a cell's serpentine. Side picks sweep direction
// (left = sweep toward +x), vert picks the first pass's starting end.
struct CellEntry {
    int cell = 0;
    bool from_right = false;
    bool from_top = false;
};

std::vector<BcdCell> decompose(const GridMap& map, const RegionMask& mask);

// Passes spaced footprint_m apart, first at footprint_m/2 from the cell's
// left edge, last clamped footprint_m/2 from the right edge; a single
// centered pass when the cell is narrower than the footprint.
std::vector<Pass> generate_passes(const BcdCell& cell, const GridMap& map, double footprint_m);

// Visiting order over all cells. Exhaustive permutation search up to 8 cells,
// nearest-neighbor seeding with 2-opt above that. Entry corners are chosen
// greedily to shorten the transit from the previous cell's exit.
std::vector<CellEntry> order_cells(const GridMap& map, const std::vector<BcdCell>& cells,
                                   double footprint_m);

// Serpentine endpoints of one cell's visit under the given entry corner.
Point2 entry_point(const BcdCell& cell, const GridMap& map, double footprint_m,
                   bool from_right, bool from_top);
Point2 exit_point(const BcdCell& cell, const GridMap& map, double footprint_m,
                  bool from_right, bool from_top);

// Full coverage path: ordered cells' serpentines joined by obstacle-free
// transits. Deterministic for fixed input.
CoveragePath plan_coverage(const GridMap& map, const RegionMask& mask, double footprint_m,
                           Role role);

}  // namespace agcvg
