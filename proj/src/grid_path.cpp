#include "agcvg/grid_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "agcvg/errors.hpp"

namespace agcvg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool cell_free(const GridMap& map, int c, int r) {
    return map.in_bounds(c, r) && !map.occupied(c, r);
}

}  // namespace

bool line_of_sight(const GridMap& map, Point2 a, Point2 b) {
    const double res = map.resolution();
    int cx = map.col_at(a.x), cy = map.row_at(a.y);
    const int ex = map.col_at(b.x), ey = map.row_at(b.y);
    if (!cell_free(map, cx, cy) || !cell_free(map, ex, ey)) return false;

    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const int step_x = dx > 0 ? 1 : -1;
    const int step_y = dy > 0 ? 1 : -1;

    // Parametric distance to the next vertical / horizontal grid line.
    double t_max_x = kInf, t_delta_x = kInf;
    if (dx != 0.0) {
        const double next = (dx > 0 ? (cx + 1) * res : cx * res);
        t_max_x = (next - a.x) / dx;
        t_delta_x = res / std::abs(dx);
    }
    double t_max_y = kInf, t_delta_y = kInf;
    if (dy != 0.0) {
        const double next = (dy > 0 ? (cy + 1) * res : cy * res);
        t_max_y = (next - a.y) / dy;
        t_delta_y = res / std::abs(dy);
    }

    while (cx != ex || cy != ey) {
        if (t_max_x < t_max_y) {
            cx += step_x;
            t_max_x += t_delta_x;
        } else if (t_max_y < t_max_x) {
            cy += step_y;
            t_max_y += t_delta_y;
        } else {
            // Exactly through a lattice corner: take the diagonal but require
            // both cells alongside it to be free, matching the no-corner-cut
            // rule of the grid search.
            if (!cell_free(map, cx + step_x, cy) || !cell_free(map, cx, cy + step_y)) return false;
            cx += step_x;
            cy += step_y;
            t_max_x += t_delta_x;
            t_max_y += t_delta_y;
        }
        if (!cell_free(map, cx, cy)) return false;
        if ((step_x > 0 ? cx > ex : cx < ex) || (step_y > 0 ? cy > ey : cy < ey)) break;
    }
    return cx == ex && cy == ey;
}

std::vector<Point2> grid_shortest_path(const GridMap& map, Point2 a, Point2 b) {
    if (line_of_sight(map, a, b)) {
        if (a == b) return {a};
        return {a, b};
    }

    const int w = map.width(), h = map.height();
    const int sc = map.col_at(a.x), sr = map.row_at(a.y);
    const int gc = map.col_at(b.x), gr = map.row_at(b.y);
    if (!cell_free(map, sc, sr) || !cell_free(map, gc, gr))
        throw ValidationError("transit endpoint lies in an obstacle or outside the map");

    const double res = map.resolution();
    const double diag = res * std::sqrt(2.0);
    const int start = sr * w + sc;
    const int goal = gr * w + gc;

    std::vector<double> dist(static_cast<std::size_t>(w) * h, kInf);
    std::vector<int> prev(dist.size(), -1);
    using Node = std::pair<double, int>;
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    dist[start] = 0.0;
    pq.push({0.0, start});

    static constexpr int dc[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dr[8] = {0, 0, 1, -1, 1, -1, 1, -1};

    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        if (u == goal) break;
        const int uc = u % w, ur = u / w;
        for (int k = 0; k < 8; ++k) {
            const int vc = uc + dc[k], vr = ur + dr[k];
            if (!cell_free(map, vc, vr)) continue;
            const bool diagonal = k >= 4;
            if (diagonal && (!cell_free(map, uc + dc[k], ur) || !cell_free(map, uc, ur + dr[k])))
                continue;
            const int v = vr * w + vc;
            const double nd = d + (diagonal ? diag : res);
            if (nd + 1e-12 < dist[v]) {
                dist[v] = nd;
                prev[v] = u;
                pq.push({nd, v});
            }
        }
    }
    if (dist[goal] == kInf)
        throw ValidationError("no obstacle-free transit between coverage cells");

    std::vector<Point2> pts;
    pts.push_back(b);
    for (int v = goal; v != -1; v = prev[v])
        pts.push_back(map.cell_center(v % w, v / w));
    pts.push_back(a);
    std::reverse(pts.begin(), pts.end());

    // Shortcut smoothing: keep the farthest visible waypoint from each kept one.
    std::vector<Point2> out;
    out.push_back(pts.front());
    std::size_t i = 0;
    while (i + 1 < pts.size()) {
        std::size_t j = pts.size() - 1;
        while (j > i + 1 && !line_of_sight(map, pts[i], pts[j])) --j;
        out.push_back(pts[j]);
        i = j;
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double grid_path_length(const GridMap& map, Point2 a, Point2 b) {
    const auto pts = grid_shortest_path(map, a, b);
    return polyline_length(pts);
}

}  // namespace agcvg
