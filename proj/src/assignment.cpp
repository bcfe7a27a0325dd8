#include "agcvg/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "agcvg/errors.hpp"

namespace agcvg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Evenly spaced indices over [0, size) keeping both endpoints.
std::vector<int> sample_indices(int size, int count) {
    std::vector<int> idx(count);
    if (count == 1) {
        idx[0] = 0;
        return idx;
    }
    for (int i = 0; i < count; ++i)
        idx[i] = static_cast<int>(std::llround(static_cast<double>(i) * (size - 1) / (count - 1)));
    return idx;
}

void finish(Assignment& a, const BipartiteCosts& costs) {
    a.total_cost = 0.0;
    a.max_edge_cost = 0.0;
    for (const auto& [i, j] : a.pairs) {
        const double c = costs.at(i, j);
        a.total_cost += c;
        a.max_edge_cost = std::max(a.max_edge_cost, c);
    }
}

// Potentials method on an n x m matrix with n <= m. p[j] holds the row
// matched to column j (1-based internally).
std::vector<int> hungarian(int n, int m, const std::vector<double>& a) {
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    auto cost = [&](int i, int j) { return a[static_cast<std::size_t>(i - 1) * m + (j - 1)]; };
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= m; ++j)
                if (!used[j]) {
                    const double cur = cost(i0, j) - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if (minv[j] < delta) {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            for (int j = 0; j <= m; ++j)
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    return p;
}

// Augmenting path for Kuhn's matching over edges with cost <= limit.
bool try_augment(int i, const BipartiteCosts& costs, double limit, std::vector<char>& visited,
                 std::vector<int>& match_right) {
    for (int j = 0; j < costs.right_size; ++j) {
        if (visited[j] || costs.at(i, j) > limit) continue;
        visited[j] = 1;
        if (match_right[j] < 0 ||
            try_augment(match_right[j], costs, limit, visited, match_right)) {
            match_right[j] = i;
            return true;
        }
    }
    return false;
}

int matching_size(const BipartiteCosts& costs, double limit, std::vector<int>& match_right) {
    match_right.assign(costs.right_size, -1);
    int size = 0;
    std::vector<char> visited(costs.right_size);
    for (int i = 0; i < costs.left_size; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (try_augment(i, costs, limit, visited, match_right)) ++size;
    }
    return size;
}

BipartiteCosts transpose(const BipartiteCosts& costs) {
    BipartiteCosts t;
    t.left_size = costs.right_size;
    t.right_size = costs.left_size;
    t.unit = costs.unit;
    t.cost.resize(costs.cost.size());
    for (int i = 0; i < costs.left_size; ++i)
        for (int j = 0; j < costs.right_size; ++j)
            t.cost[static_cast<std::size_t>(j) * t.right_size + i] = costs.at(i, j);
    return t;
}

void validate_costs(const BipartiteCosts& costs) {
    if (costs.left_size <= 0 || costs.right_size <= 0)
        throw ValidationError("cost matrix must be non-empty");
    if (costs.cost.size() != static_cast<std::size_t>(costs.left_size) * costs.right_size)
        throw ValidationError("cost matrix size does not match its dimensions");
    for (const double c : costs.cost)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw ValidationError("cost matrix entries must be finite and nonnegative");
}

}  // namespace

BipartiteCosts build_waypoint_costs(const CoveragePath& path_a, const CoveragePath& path_g) {
    if (path_a.empty() || path_g.empty())
        throw ValidationError("waypoint cost matrix needs two non-empty paths");
    const int n = static_cast<int>(std::min(path_a.size(), path_g.size()));
    const auto ia = sample_indices(static_cast<int>(path_a.size()), n);
    const auto ig = sample_indices(static_cast<int>(path_g.size()), n);
    BipartiteCosts costs;
    costs.left_size = n;
    costs.right_size = n;
    costs.unit = "m";
    costs.cost.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            costs.cost[static_cast<std::size_t>(i) * n + j] =
                distance(path_a.waypoints[ia[i]], path_g.waypoints[ig[j]]);
    return costs;
}

Assignment min_cost_matching(const BipartiteCosts& costs) {
    validate_costs(costs);
    Assignment out;
    if (costs.left_size <= costs.right_size) {
        const auto p = hungarian(costs.left_size, costs.right_size, costs.cost);
        for (int j = 1; j <= costs.right_size; ++j)
            if (p[j] != 0) out.pairs.emplace_back(p[j] - 1, j - 1);
    } else {
        const auto t = transpose(costs);
        const auto p = hungarian(t.left_size, t.right_size, t.cost);
        for (int j = 1; j <= t.right_size; ++j)
            if (p[j] != 0) out.pairs.emplace_back(j - 1, p[j] - 1);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    finish(out, costs);
    return out;
}

Assignment bottleneck_matching(const BipartiteCosts& costs) {
    validate_costs(costs);
    const int target = std::min(costs.left_size, costs.right_size);
    std::vector<double> values = costs.cost;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<int> match_right;
    int lo = 0, hi = static_cast<int>(values.size()) - 1;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (matching_size(costs, values[mid], match_right) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    matching_size(costs, values[lo], match_right);

    Assignment out;
    for (int j = 0; j < costs.right_size; ++j)
        if (match_right[j] >= 0) out.pairs.emplace_back(match_right[j], j);
    std::sort(out.pairs.begin(), out.pairs.end());
    finish(out, costs);
    return out;
}

const char* tmax_mode_name(TmaxMode m) {
    switch (m) {
        case TmaxMode::nearest: return "nearest";
        case TmaxMode::bottleneck: return "bottleneck";
        case TmaxMode::min_cost_max_edge: return "min_cost_max_edge";
    }
    return "nearest";
}

double rendezvous_bound(const CoveragePath& path_a, const CoveragePath& path_g, double nu_a,
                        TmaxMode mode) {
    if (!(nu_a > 0.0)) throw ValidationError("aerial speed must be positive");
    if (path_a.empty() || path_g.empty())
        throw ValidationError("rendezvous bound needs two non-empty paths");
    if (mode == TmaxMode::nearest) {
        double worst = 0.0;
        for (const auto& a : path_a.waypoints) {
            double nearest = kInf;
            for (const auto& g : path_g.waypoints) {
                const double d = distance(a, g);
                if (d < nearest) nearest = d;
            }
            worst = std::max(worst, nearest);
        }
        return worst / nu_a;
    }
    const auto costs = build_waypoint_costs(path_a, path_g);
    const auto match = mode == TmaxMode::bottleneck ? bottleneck_matching(costs)
                                                    : min_cost_matching(costs);
    return match.max_edge_cost / nu_a;
}

}  // namespace agcvg
