#pragma once

#include <cstdint>
#include <vector>

#include "agcvg/geometry.hpp"

namespace agcvg {

// Uniform raster environment. Cells are indexed (col, row) with row 0 at the
// bottom edge; cell (col, row) has its center at ((col+0.5)*res, (row+0.5)*res)
// in meters. Occupancy is stored row-major, true = obstacle.
class GridMap {
public:
    GridMap() : width_(1), height_(1), resolution_(1.0), occupancy_(1, 0) {}
    GridMap(int width, int height, double resolution_m, std::vector<std::uint8_t> occupancy);

    int width() const { return width_; }
    int height() const { return height_; }
    double resolution() const { return resolution_; }

    bool in_bounds(int col, int row) const {
        return col >= 0 && col < width_ && row >= 0 && row < height_;
    }
    std::size_t index(int col, int row) const {
        return static_cast<std::size_t>(row) * width_ + col;
    }
    bool occupied(int col, int row) const { return occupancy_[index(col, row)] != 0; }

    Point2 cell_center(int col, int row) const {
        return {(col + 0.5) * resolution_, (row + 0.5) * resolution_};
    }
    int col_at(double x_m) const { return static_cast<int>(x_m / resolution_); }
    int row_at(double y_m) const { return static_cast<int>(y_m / resolution_); }

    const std::vector<std::uint8_t>& occupancy() const { return occupancy_; }

private:
    int width_;
    int height_;
    double resolution_;
    std::vector<std::uint8_t> occupancy_;
};

// Cells a vehicle must cover. Same dimensions as the owning map; a masked
// cell is never an obstacle cell (enforced at scenario validation).
struct RegionMask {
    std::vector<std::uint8_t> cells;

    bool at(const GridMap& map, int col, int row) const {
        return cells[map.index(col, row)] != 0;
    }
};

// Number of cells both masked and obstacle-free.
int free_cell_count(const GridMap& map, const RegionMask& mask);

}  // namespace agcvg
