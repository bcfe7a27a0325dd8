#pragma once

// Shared test utilities: brute-force oracles, a seeded random-scenario
// generator, and a subprocess runner for CLI tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "agcvg/assignment.hpp"
#include "agcvg/bcd.hpp"
#include "agcvg/errors.hpp"
#include "agcvg/planner.hpp"
#include "agcvg/scenario.hpp"

namespace testutil {

// ---- assignment oracles (feasible up to ~8x8) ----

// Enumerates injections of the smaller side into the larger via column
// permutations; returns the minimum total cost.
inline double oracle_min_cost(const agcvg::BipartiteCosts& c) {
    const bool flip = c.left_size > c.right_size;
    const int n = flip ? c.right_size : c.left_size;
    const int m = flip ? c.left_size : c.right_size;
    const auto cost = [&](int i, int j) { return flip ? c.at(j, i) : c.at(i, j); };
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += cost(i, perm[i]);
        best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline double oracle_min_max_edge(const agcvg::BipartiteCosts& c) {
    const bool flip = c.left_size > c.right_size;
    const int n = flip ? c.right_size : c.left_size;
    const int m = flip ? c.left_size : c.right_size;
    const auto cost = [&](int i, int j) { return flip ? c.at(j, i) : c.at(i, j); };
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) worst = std::max(worst, cost(i, perm[i]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline agcvg::BipartiteCosts random_costs(std::mt19937& rng, int n, int m, bool integer_valued) {
    agcvg::BipartiteCosts c;
    c.left_size = n;
    c.right_size = m;
    c.cost.resize(static_cast<std::size_t>(n) * m);
    std::uniform_int_distribution<int> di(0, 999);
    std::uniform_real_distribution<double> dr(0.0, 100.0);
    for (auto& v : c.cost) v = integer_valued ? static_cast<double>(di(rng)) : dr(rng);
    return c;
}

// ---- independent coverage check ----

// Re-derives point-to-segment distance from explicit endpoint/foot cases
// instead of the library's clamped projection.
inline double seg_dist_alt(const agcvg::Point2& p, const agcvg::Point2& a,
                           const agcvg::Point2& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double wx = p.x - a.x, wy = p.y - a.y;
    const double c1 = vx * wx + vy * wy;
    if (c1 <= 0.0) return std::hypot(p.x - a.x, p.y - a.y);
    const double c2 = vx * vx + vy * vy;
    if (c2 <= c1) return std::hypot(p.x - b.x, p.y - b.y);
    const double t = c1 / c2;
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

// Fraction of masked free cells within footprint/2 (+slack) of the path.
inline double oracle_coverage(const agcvg::CoveragePath& path, const agcvg::GridMap& map,
                              const agcvg::RegionMask& mask, double footprint_m) {
    const double reach = footprint_m / 2.0 + 1e-9;
    std::size_t total = 0, covered = 0;
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            if (!mask.at(map, c, r) || map.occupied(c, r)) continue;
            ++total;
            const agcvg::Point2 ctr = map.cell_center(c, r);
            bool hit = path.waypoints.size() == 1 &&
                       std::hypot(ctr.x - path.waypoints[0].x, ctr.y - path.waypoints[0].y) <= reach;
            for (std::size_t i = 1; i + 0 < path.waypoints.size() && !hit; ++i)
                hit = seg_dist_alt(ctr, path.waypoints[i - 1], path.waypoints[i]) <= reach;
            if (hit) ++covered;
        }
    }
    return total == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(total);
}

// ---- random connected scenarios ----

// Random occupancy on w x h with 4-connected free space; retries the sprinkle
// until connected, then falls back to an empty map.
inline std::vector<std::uint8_t> random_connected_occupancy(std::mt19937& rng, int w, int h,
                                                            double density) {
    std::vector<std::uint8_t> occ;
    for (int attempt = 0; attempt < 40; ++attempt) {
        occ.assign(static_cast<std::size_t>(w) * h, 0);
        std::vector<int> idx(static_cast<std::size_t>(w) * h);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        const int target = static_cast<int>(density * w * h);
        for (int i = 0; i < target; ++i) occ[idx[i]] = 1;

        int start = -1;
        int free_cells = 0;
        for (int i = 0; i < w * h; ++i)
            if (!occ[i]) {
                if (start < 0) start = i;
                ++free_cells;
            }
        if (start < 0) continue;
        std::vector<std::uint8_t> seen(occ.size(), 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            ++reached;
            const int c = cur % w, r = cur / w;
            const std::array<std::pair<int, int>, 4> nb{{{c - 1, r}, {c + 1, r}, {c, r - 1}, {c, r + 1}}};
            for (const auto& [nc, nr] : nb) {
                if (nc < 0 || nr < 0 || nc >= w || nr >= h) continue;
                const int ni = nr * w + nc;
                if (occ[ni] || seen[ni]) continue;
                seen[ni] = 1;
                stack.push_back(ni);
            }
        }
        if (reached == free_cells) return occ;
    }
    occ.assign(static_cast<std::size_t>(w) * h, 0);
    return occ;
}

// Aerial region = every free cell; ground region = free cells of a central
// horizontal band. Returns false when the band came out empty.
inline bool random_scenario_geometry(std::mt19937& rng, agcvg::Scenario& sc) {
    std::uniform_int_distribution<int> dim(8, 30);
    std::uniform_real_distribution<double> dens(0.05, 0.2);
    const int w = dim(rng), h = dim(rng);
    const double density = dens(rng);
    auto occ = random_connected_occupancy(rng, w, h, density);

    agcvg::GridMap map(w, h, 1.0, occ);
    agcvg::RegionMask aerial, ground;
    aerial.cells.assign(occ.size(), 0);
    ground.cells.assign(occ.size(), 0);
    const int band_lo = h / 2 - 1, band_hi = h / 2 + 1;
    bool any_ground = false;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * w + c;
            if (occ[i]) continue;
            aerial.cells[i] = 1;
            if (r >= band_lo && r <= band_hi) {
                ground.cells[i] = 1;
                any_ground = true;
            }
        }
    if (!any_ground) return false;

    sc.map = std::move(map);
    sc.aerial_region = std::move(aerial);
    sc.ground_region = std::move(ground);
    sc.aerial = {agcvg::Role::aerial, 1.0, 2.0};
    std::uniform_int_distribution<int> gv(0, 2);
    sc.ground = {agcvg::Role::ground, 1.0, std::array<double, 3>{0.5, 1.0, 2.0}[gv(rng)]};
    sc.energy = {1e6, 0.0, 0.0};
    sc.launch_offset_m = {0.0, 1.0};
    return true;
}

// Picks an endurance that yields 2..6 aerial clusters and leaves every sortie
// of both strategies a >= 2% charge margin by the plan's own accounting.
inline bool tune_endurance(agcvg::Scenario& sc, int& n_clusters) {
    using namespace agcvg;
    CoveragePath pa, pg;
    try {
        pa = plan_coverage(sc.map, sc.aerial_region, sc.aerial.footprint_m, Role::aerial);
        pg = plan_coverage(sc.map, sc.ground_region, sc.ground.footprint_m, Role::ground);
    } catch (const Error&) {
        return false;
    }
    const double t_max = rendezvous_bound(pa, pg, sc.aerial.speed_mps, TmaxMode::nearest);
    const double L2 = pa.total_length_m;
    if (!(L2 > 0.0)) return false;

    for (int k = 2; k <= 6; ++k) {
        const double budget = L2 / k * 1.02;
        sc.energy.endurance_s = budget / sc.aerial.speed_mps + 2.0 * t_max;
        bool ok = true;
        int clusters = 0;
        for (Strategy st : {Strategy::agcvg, Strategy::greedy}) {
            try {
                const RendezvousPlan plan = plan_route(sc, st, {});
                clusters = static_cast<int>(plan.aerial_clusters.size());
                if (clusters < 2 || clusters > 6) {
                    ok = false;
                    break;
                }
                for (std::size_t i = 0; i < plan.sorties.size(); ++i) {
                    const auto& ev = plan.events[i];
                    const double hover =
                        std::max(0.0, ev.ground_arrival_s - ev.aerial_arrival_s);
                    const double used =
                        plan.sorties[i].flight_length_m / sc.aerial.speed_mps + hover;
                    if (used > 0.98 * sc.energy.endurance_s) {
                        ok = false;
                        break;
                    }
                }
            } catch (const Error&) {
                ok = false;
            }
            if (!ok) break;
        }
        if (ok) {
            n_clusters = clusters;
            return true;
        }
    }
    return false;
}

// count scenarios, deterministic in seed. tuned=true also fixes endurance to
// force 2..6 aerial clusters per tune_endurance.
inline std::vector<agcvg::Scenario> random_suite(std::uint32_t seed, int count, bool tuned) {
    std::vector<agcvg::Scenario> out;
    std::mt19937 rng(seed);
    int serial = 0;
    while (static_cast<int>(out.size()) < count && serial < count * 200) {
        ++serial;
        agcvg::Scenario sc;
        if (!random_scenario_geometry(rng, sc)) continue;
        if (tuned) {
            int n = 0;
            if (!tune_endurance(sc, n)) continue;
        }
        sc.name = "rnd" + std::to_string(out.size());
        out.push_back(std::move(sc));
    }
    return out;
}

// ---- subprocess runner (targets that link the CLI define AGCVG_CLI_PATH) ----

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout+stderr interleaved
};

#ifdef AGCVG_CLI_PATH
inline CliResult run_cli(const std::string& args) {
    CliResult res;
    const std::string cmd = std::string(AGCVG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}
#endif

}  // namespace testutil
