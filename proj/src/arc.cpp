#include "agcvg/arc.hpp"

#include <algorithm>
#include <utility>

namespace agcvg {

ArcWalker::ArcWalker(std::vector<Point2> pts) : pts_(std::move(pts)) {
    cum_.reserve(pts_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i > 0) acc += distance(pts_[i - 1], pts_[i]);
        cum_.push_back(acc);
    }
}

Point2 ArcWalker::at(double arc) const {
    if (pts_.empty()) return {};
    if (arc <= 0.0) return pts_.front();
    if (arc >= total()) return pts_.back();
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), arc);
    const std::size_t i = static_cast<std::size_t>(it - cum_.begin());  // first cum > arc
    const double seg = cum_[i] - cum_[i - 1];
    const double t = seg > 0.0 ? (arc - cum_[i - 1]) / seg : 0.0;
    return lerp(pts_[i - 1], pts_[i], t);
}

std::vector<Point2> ArcWalker::slice(double a, double b) const {
    std::vector<Point2> out;
    if (pts_.empty()) return out;
    out.push_back(at(a));
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (cum_[i] > a + 1e-12 && cum_[i] < b - 1e-12) {
            if (!(out.back() == pts_[i])) out.push_back(pts_[i]);
        }
    }
    const Point2 end = at(b);
    if (!(out.back() == end)) out.push_back(end);
    return out;
}

}  // namespace agcvg
