#include "agcvg/geometry.hpp"

namespace agcvg {

double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double abx = b.x - a.x;
    const double aby = b.y - a.y;
    const double len2 = abx * abx + aby * aby;
    if (len2 == 0.0) return distance(p, a);
    double t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return distance(p, lerp(a, b, t));
}

double polyline_length(std::span<const Point2> pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
    return len;
}

}  // namespace agcvg
