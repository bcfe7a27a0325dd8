#pragma once

#include <string>
#include <vector>

#include "agcvg/metrics.hpp"
#include "agcvg/planner.hpp"
#include "agcvg/simulator.hpp"

namespace agcvg {

std::string plan_to_json(const RendezvousPlan& plan);
RendezvousPlan plan_from_json(const std::string& json_text);
void save_plan(const RendezvousPlan& plan, const std::string& path);
RendezvousPlan load_plan(const std::string& path);

// CSV: time_s, vehicle, x_m, y_m, state, energy_s (energy blank for ground).
std::string timeline_to_csv(const Timeline& timeline);

// Flat key=value lines, one metric per line.
std::string metrics_to_kv(const MissionMetrics& m);

// One row per scenario with both strategies' metrics and the gap.
std::string comparison_table_csv(const std::vector<ComparisonRecord>& records);

// Mean gap in percentage points over rows where both strategies ran.
double mean_gap_pp(const std::vector<ComparisonRecord>& records);

}  // namespace agcvg
