#include "agcvg/grid_map.hpp"

#include <utility>

#include "agcvg/errors.hpp"

namespace agcvg {

GridMap::GridMap(int width, int height, double resolution_m, std::vector<std::uint8_t> occupancy)
    : width_(width), height_(height), resolution_(resolution_m), occupancy_(std::move(occupancy)) {
    if (width_ <= 0 || height_ <= 0)
        throw ValidationError("grid dimensions must be positive");
    if (!(resolution_ > 0.0))
        throw ValidationError("resolution_m must be positive");
    if (occupancy_.size() != static_cast<std::size_t>(width_) * height_)
        throw ValidationError("occupancy size does not match width*height");
}

int free_cell_count(const GridMap& map, const RegionMask& mask) {
    int n = 0;
    for (int r = 0; r < map.height(); ++r)
        for (int c = 0; c < map.width(); ++c)
            if (mask.at(map, c, r) && !map.occupied(c, r)) ++n;
    return n;
}

}  // namespace agcvg
