#include "agcvg/svg_render.hpp"

#include <cstdio>
#include <sstream>

namespace agcvg {

namespace {

constexpr double kPxPerCell = 24.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Scenario& sc, const RendezvousPlan* plan) {
    const GridMap& map = sc.map;
    const double scale = kPxPerCell / map.resolution();
    const double w_px = map.width() * kPxPerCell;
    const double h_px = map.height() * kPxPerCell;
    const auto px = [&](double x_m) { return x_m * scale; };
    const auto py = [&](double y_m) { return h_px - y_m * scale; };  // y up in meters

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w_px) << "\" height=\""
        << num(h_px) << "\" viewBox=\"0 0 " << num(w_px) << " " << num(h_px) << "\">\n";
    svg << "<rect width=\"" << num(w_px) << "\" height=\"" << num(h_px)
        << "\" fill=\"#ffffff\"/>\n";

    const auto cell_rect = [&](int c, int r, const char* fill, const char* extra) {
        svg << "<rect x=\"" << num(c * kPxPerCell) << "\" y=\""
            << num(h_px - (r + 1) * kPxPerCell) << "\" width=\"" << num(kPxPerCell)
            << "\" height=\"" << num(kPxPerCell) << "\" fill=\"" << fill << "\"" << extra
            << "/>\n";
    };
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            if (map.occupied(c, r)) {
                cell_rect(c, r, "#333333", "");
                continue;
            }
            if (sc.aerial_region.at(map, c, r))
                cell_rect(c, r, "#e07b00", " fill-opacity=\"0.25\"");
            if (sc.ground_region.at(map, c, r))
                cell_rect(c, r, "#2a6fc9", " fill-opacity=\"0.25\"");
        }
    }
    // Cell grid lines keep the raster readable at any size.
    svg << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
    for (int c = 0; c <= map.width(); ++c)
        svg << "<line x1=\"" << num(c * kPxPerCell) << "\" y1=\"0\" x2=\""
            << num(c * kPxPerCell) << "\" y2=\"" << num(h_px) << "\"/>\n";
    for (int r = 0; r <= map.height(); ++r)
        svg << "<line x1=\"0\" y1=\"" << num(r * kPxPerCell) << "\" x2=\"" << num(w_px)
            << "\" y2=\"" << num(r * kPxPerCell) << "\"/>\n";
    svg << "</g>\n";

    const auto polyline = [&](const std::vector<Point2>& pts, const char* stroke, double width) {
        if (pts.size() < 2) return;
        svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
            << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) svg << ' ';
            svg << num(px(pts[i].x)) << ',' << num(py(pts[i].y));
        }
        svg << "\"/>\n";
    };

    if (plan) {
        polyline(plan->ground.waypoints, "#7b2d8b", 2.5);
        polyline(plan->aerial.waypoints, "#e6b800", 2.0);
        for (const auto& ev : plan->events) {
            const double cx = px(ev.location.x);
            const double cy = py(ev.location.y);
            svg << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
                << "\" r=\"7\" fill=\"#ffffff\" stroke=\"#7b2d8b\" stroke-width=\"1.5\"/>\n";
            svg << "<text x=\"" << num(cx) << "\" y=\"" << num(cy + 3.5)
                << "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\" "
                   "fill=\"#7b2d8b\">"
                << ev.recharge_index << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace agcvg
