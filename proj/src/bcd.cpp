#include "agcvg/bcd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

#include "agcvg/errors.hpp"
#include "agcvg/grid_path.hpp"

namespace agcvg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Run {
    int lo, hi, cell;
};

}  // namespace

std::vector<BcdCell> decompose(const GridMap& map, const RegionMask& mask) {
    std::vector<BcdCell> cells;
    std::vector<Run> prev;
    for (int c = 0; c < map.width(); ++c) {
        std::vector<Run> cur;
        int r = 0;
        while (r < map.height()) {
            if (mask.at(map, c, r) && !map.occupied(c, r)) {
                const int lo = r;
                while (r + 1 < map.height() && mask.at(map, c, r + 1) && !map.occupied(c, r + 1))
                    ++r;
                cur.push_back({lo, r, -1});
            }
            ++r;
        }
        // A run continues the previous column's cell only when the interval
        // is identical; any change starts a new rectangular cell.
        for (auto& run : cur) {
            for (const auto& p : prev)
                if (p.lo == run.lo && p.hi == run.hi) {
                    run.cell = p.cell;
                    cells[run.cell].col_hi = c;
                    break;
                }
            if (run.cell < 0) {
                run.cell = static_cast<int>(cells.size());
                cells.push_back({run.cell, c, c, run.lo, run.hi, {}});
            }
        }
        // Horizontal adjacency between overlapping runs of neighboring columns.
        for (const auto& p : prev)
            for (const auto& q : cur) {
                if (p.cell == q.cell) continue;
                if (p.lo <= q.hi && q.lo <= p.hi) {
                    auto& pn = cells[p.cell].neighbors;
                    auto& qn = cells[q.cell].neighbors;
                    if (std::find(pn.begin(), pn.end(), q.cell) == pn.end()) pn.push_back(q.cell);
                    if (std::find(qn.begin(), qn.end(), p.cell) == qn.end()) qn.push_back(p.cell);
                }
            }
        prev = std::move(cur);
    }
    for (auto& cell : cells) std::sort(cell.neighbors.begin(), cell.neighbors.end());
    return cells;
}

std::vector<Pass> generate_passes(const BcdCell& cell, const GridMap& map, double footprint_m) {
    const double res = map.resolution();
    const double x_left = cell.col_lo * res;
    const double x_right = (cell.col_hi + 1) * res;
    const double y_lo = (cell.row_lo + 0.5) * res;
    const double y_hi = (cell.row_hi + 0.5) * res;
    const double width = x_right - x_left;

    std::vector<Pass> passes;
    if (width <= footprint_m) {
        passes.push_back({(x_left + x_right) / 2.0, y_lo, y_hi});
        return passes;
    }
    const int n = static_cast<int>(std::ceil(width / footprint_m));
    for (int i = 0; i < n; ++i) {
        double x = x_left + footprint_m / 2.0 + i * footprint_m;
        if (x > x_right - footprint_m / 2.0) x = x_right - footprint_m / 2.0;
        passes.push_back({x, y_lo, y_hi});
    }
    return passes;
}

namespace {

// Serpentine terminal of a cell. entry: position of the first pass's first
// endpoint under the corner choice; exit: last endpoint after sweeping all
// passes with alternating direction.
Point2 serpentine_terminal(const BcdCell& cell, const GridMap& map, double footprint_m,
                           bool from_right, bool from_top, bool exit_end) {
    const auto passes = generate_passes(cell, map, footprint_m);
    const std::size_t n = passes.size();
    const Pass& pass = exit_end ? (from_right ? passes.front() : passes.back())
                                : (from_right ? passes.back() : passes.front());
    bool top = from_top;
    if (exit_end && n % 2 == 1) top = !top;  // odd pass count flips the final end
    return {pass.x_m, top ? pass.y_hi_m : pass.y_lo_m};
}

}  // namespace

Point2 entry_point(const BcdCell& cell, const GridMap& map, double footprint_m, bool from_right,
                   bool from_top) {
    return serpentine_terminal(cell, map, footprint_m, from_right, from_top, false);
}

Point2 exit_point(const BcdCell& cell, const GridMap& map, double footprint_m, bool from_right,
                  bool from_top) {
    return serpentine_terminal(cell, map, footprint_m, from_right, from_top, true);
}

namespace {

struct TransitKey {
    int a, ca, b, cb;
    bool operator<(const TransitKey& o) const {
        return std::tie(a, ca, b, cb) < std::tie(o.a, o.ca, o.b, o.cb);
    }
};

// Walks one candidate order, greedily picking each cell's entry corner to
// minimize the transit from the previous exit. Returns the summed transit
// length and fills the chosen entries.
double walk_order(const GridMap& map, const std::vector<BcdCell>& cells, double footprint_m,
                  const std::vector<int>& order, std::map<TransitKey, double>& memo,
                  std::vector<CellEntry>* entries) {
    double total = 0.0;
    int prev_cell = -1, prev_code = 0;
    std::optional<Point2> prev_exit;
    if (entries) entries->clear();
    for (const int id : order) {
        int best_code = 0;
        double best_cost = 0.0;
        if (prev_exit) {
            best_cost = kInf;
            for (int code = 0; code < 4; ++code) {
                const TransitKey key{prev_cell, prev_code, id, code};
                auto it = memo.find(key);
                if (it == memo.end()) {
                    const Point2 e = entry_point(cells[id], map, footprint_m, code & 2, code & 1);
                    it = memo.emplace(key, grid_path_length(map, *prev_exit, e)).first;
                }
                if (it->second < best_cost) {
                    best_cost = it->second;
                    best_code = code;
                }
            }
        }
        total += best_cost;
        if (entries) entries->push_back({id, (best_code & 2) != 0, (best_code & 1) != 0});
        prev_exit = exit_point(cells[id], map, footprint_m, best_code & 2, best_code & 1);
        prev_cell = id;
        prev_code = best_code;
    }
    return total;
}

Point2 cell_center_point(const BcdCell& cell, double res) {
    return {(cell.col_lo + cell.col_hi + 1) * res / 2.0, (cell.row_lo + cell.row_hi + 1) * res / 2.0};
}

}  // namespace

std::vector<CellEntry> order_cells(const GridMap& map, const std::vector<BcdCell>& cells,
                                   double footprint_m) {
    std::vector<CellEntry> best_entries;
    if (cells.empty()) return best_entries;

    std::vector<int> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::map<TransitKey, double> memo;

    if (cells.size() <= 8) {
        std::vector<int> perm = order;
        double best = kInf;
        std::vector<CellEntry> entries;
        do {
            const double cost = walk_order(map, cells, footprint_m, perm, memo, &entries);
            if (cost < best) {
                best = cost;
                best_entries = entries;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best_entries;
    }

    // Too many cells to enumerate: nearest-neighbor seed plus 2-opt over
    // straight-line distances between cell centers, exact transits afterward.
    const double res = map.resolution();
    std::vector<Point2> centers(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) centers[i] = cell_center_point(cells[i], res);
    auto d = [&](int a, int b) { return distance(centers[a], centers[b]); };

    std::vector<int> tour;
    std::vector<bool> used(cells.size(), false);
    int cur = 0;
    tour.push_back(0);
    used[0] = true;
    for (std::size_t step = 1; step < cells.size(); ++step) {
        int next = -1;
        double best = kInf;
        for (std::size_t j = 0; j < cells.size(); ++j)
            if (!used[j] && d(cur, static_cast<int>(j)) < best) {
                best = d(cur, static_cast<int>(j));
                next = static_cast<int>(j);
            }
        tour.push_back(next);
        used[next] = true;
        cur = next;
    }

    bool improved = true;
    int sweeps = 0;
    while (improved && sweeps < 40) {
        improved = false;
        ++sweeps;
        for (std::size_t i = 0; i + 1 < tour.size(); ++i)
            for (std::size_t j = i + 1; j < tour.size(); ++j) {
                // Reversing tour[i..j] changes only the two boundary edges.
                const double before = (i > 0 ? d(tour[i - 1], tour[i]) : 0.0) +
                                      (j + 1 < tour.size() ? d(tour[j], tour[j + 1]) : 0.0);
                const double after = (i > 0 ? d(tour[i - 1], tour[j]) : 0.0) +
                                     (j + 1 < tour.size() ? d(tour[i], tour[j + 1]) : 0.0);
                if (after + 1e-12 < before) {
                    std::reverse(tour.begin() + i, tour.begin() + j + 1);
                    improved = true;
                }
            }
    }

    walk_order(map, cells, footprint_m, tour, memo, &best_entries);
    return best_entries;
}

CoveragePath plan_coverage(const GridMap& map, const RegionMask& mask, double footprint_m,
                           Role role) {
    const auto cells = decompose(map, mask);
    if (cells.empty()) throw ValidationError("coverage region has no free cells");
    const auto order = order_cells(map, cells, footprint_m);

    CoveragePath path;
    path.role = role;
    auto append = [&](const Point2& p, bool transit) {
        if (!path.waypoints.empty() && path.waypoints.back() == p) return;
        if (!path.waypoints.empty()) path.segment_transit.push_back(transit ? 1 : 0);
        path.waypoints.push_back(p);
    };

    std::optional<Point2> prev_exit;
    for (const auto& visit : order) {
        const BcdCell& cell = cells[visit.cell];
        auto passes = generate_passes(cell, map, footprint_m);
        if (visit.from_right) std::reverse(passes.begin(), passes.end());

        const Point2 entry{passes.front().x_m,
                           visit.from_top ? passes.front().y_hi_m : passes.front().y_lo_m};
        if (prev_exit) {
            const auto transit = grid_shortest_path(map, *prev_exit, entry);
            for (std::size_t i = 1; i < transit.size(); ++i) append(transit[i], true);
        }

        bool top = visit.from_top;
        for (const auto& pass : passes) {
            append({pass.x_m, top ? pass.y_hi_m : pass.y_lo_m}, false);
            append({pass.x_m, top ? pass.y_lo_m : pass.y_hi_m}, false);
            top = !top;
        }
        prev_exit = path.waypoints.back();
    }
    path.total_length_m = polyline_length(path.waypoints);
    return path;
}

}  // namespace agcvg
