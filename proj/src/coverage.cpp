#include "agcvg/coverage.hpp"

namespace agcvg {

double path_length(const CoveragePath& path) {
    return polyline_length(path.waypoints);
}

}  // namespace agcvg
