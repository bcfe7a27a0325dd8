#pragma once

#include <vector>

#include "agcvg/geometry.hpp"

namespace agcvg {

// Arc-length addressing along a polyline (owns a copy of the points).
class ArcWalker {
public:
    explicit ArcWalker(std::vector<Point2> pts);

    double total() const { return cum_.empty() ? 0.0 : cum_.back(); }
    const std::vector<Point2>& points() const { return pts_; }
    const std::vector<double>& cum() const { return cum_; }

    // Position at the given arc length, clamped to [0, total].
    Point2 at(double arc) const;

    // Sub-polyline from arc a to arc b (a <= b), both endpoints included,
    // interior waypoints kept.
    std::vector<Point2> slice(double a, double b) const;

private:
    std::vector<Point2> pts_;
    std::vector<double> cum_;
};

}  // namespace agcvg
