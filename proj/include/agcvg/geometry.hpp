#pragma once

#include <cmath>
#include <span>

namespace agcvg {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

inline double distance(const Point2& a, const Point2& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Point at parameter t in [0,1] along the segment a->b.
inline Point2 lerp(const Point2& a, const Point2& b, double t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

// Distance from p to the closed segment [a, b].
double segment_distance(const Point2& p, const Point2& a, const Point2& b);

double polyline_length(std::span<const Point2> pts);

}  // namespace agcvg
