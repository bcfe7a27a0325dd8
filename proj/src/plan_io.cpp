#include "agcvg/plan_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "agcvg/errors.hpp"

namespace agcvg {

using nlohmann::json;

namespace {

json points_to_json(const std::vector<Point2>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(json::array({p.x, p.y}));
    return arr;
}

std::vector<Point2> points_from_json(const json& arr) {
    std::vector<Point2> pts;
    pts.reserve(arr.size());
    for (const auto& e : arr) pts.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
    return pts;
}

json marks_to_json(const std::vector<std::uint8_t>& marks) {
    json arr = json::array();
    for (auto m : marks) arr.push_back(static_cast<int>(m));
    return arr;
}

std::vector<std::uint8_t> marks_from_json(const json& arr) {
    std::vector<std::uint8_t> marks;
    marks.reserve(arr.size());
    for (const auto& e : arr) marks.push_back(e.get<int>() ? 1 : 0);
    return marks;
}

json path_to_json(const CoveragePath& p) {
    return {{"role", role_name(p.role)},
            {"total_length_m", p.total_length_m},
            {"waypoints", points_to_json(p.waypoints)},
            {"segment_transit", marks_to_json(p.segment_transit)}};
}

Role role_from_string(const std::string& s) {
    if (s == "aerial") return Role::aerial;
    if (s == "ground") return Role::ground;
    throw ParseError("unknown role \"" + s + "\"");
}

CoveragePath path_from_json(const json& j) {
    CoveragePath p;
    p.role = role_from_string(j.at("role").get<std::string>());
    p.total_length_m = j.at("total_length_m").get<double>();
    p.waypoints = points_from_json(j.at("waypoints"));
    p.segment_transit = marks_from_json(j.at("segment_transit"));
    return p;
}

json cluster_to_json(const PathCluster& c) {
    return {{"id", c.id},
            {"role", role_name(c.role)},
            {"length_m", c.length_m},
            {"waypoints", points_to_json(c.waypoints)},
            {"segment_transit", marks_to_json(c.segment_transit)}};
}

PathCluster cluster_from_json(const json& j) {
    PathCluster c;
    c.id = j.at("id").get<int>();
    c.role = role_from_string(j.at("role").get<std::string>());
    c.length_m = j.at("length_m").get<double>();
    c.waypoints = points_from_json(j.at("waypoints"));
    c.segment_transit = marks_from_json(j.at("segment_transit"));
    return c;
}

TmaxMode tmax_mode_from_string(const std::string& s) {
    if (s == "nearest") return TmaxMode::nearest;
    if (s == "bottleneck") return TmaxMode::bottleneck;
    if (s == "min_cost_max_edge") return TmaxMode::min_cost_max_edge;
    throw ParseError("unknown t_max mode \"" + s + "\"");
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "agcvg") return Strategy::agcvg;
    if (s == "greedy") return Strategy::greedy;
    throw ParseError("unknown strategy \"" + s + "\"");
}

BudgetFormula budget_formula_from_string(const std::string& s) {
    if (s == "T_minus_2tmax") return BudgetFormula::T_minus_2tmax;
    if (s == "T_minus_tmax") return BudgetFormula::T_minus_tmax;
    throw ParseError("unknown budget formula \"" + s + "\"");
}

}  // namespace

std::string plan_to_json(const RendezvousPlan& plan) {
    json j;
    j["strategy"] = strategy_name(plan.strategy);
    j["config"] = {{"tmax_mode", tmax_mode_name(plan.config.tmax_mode)},
                   {"budget_formula", budget_formula_name(plan.config.budget_formula)},
                   {"recharge_s", plan.config.recharge_s}};
    j["t_max_s"] = plan.t_max_s;
    j["aerial_budget_m"] = plan.aerial_budget_m;
    j["ground_budget_m"] = plan.ground_budget_m;
    j["L1_m"] = plan.L1_m;
    j["L2_m"] = plan.L2_m;
    j["aerial"] = path_to_json(plan.aerial);
    j["ground"] = path_to_json(plan.ground);
    j["aerial_clusters"] = json::array();
    for (const auto& c : plan.aerial_clusters) j["aerial_clusters"].push_back(cluster_to_json(c));
    j["ground_clusters"] = json::array();
    for (const auto& c : plan.ground_clusters) j["ground_clusters"].push_back(cluster_to_json(c));
    j["sorties"] = json::array();
    for (const auto& s : plan.sorties) {
        j["sorties"].push_back({{"aerial_cluster", s.aerial_cluster},
                                {"reversed", s.reversed},
                                {"takeoff_arc_m", s.takeoff_arc_m},
                                {"flight_length_m", s.flight_length_m},
                                {"cover_begin", s.cover_begin},
                                {"cover_end", s.cover_end},
                                {"ride_in", points_to_json(s.ride_in)},
                                {"flight", points_to_json(s.flight)},
                                {"flight_transit", marks_to_json(s.flight_transit)}});
    }
    j["events"] = json::array();
    for (const auto& e : plan.events) {
        j["events"].push_back({{"location", json::array({e.location.x, e.location.y})},
                               {"aerial_arrival_s", e.aerial_arrival_s},
                               {"ground_arrival_s", e.ground_arrival_s},
                               {"wait_s", e.wait_s},
                               {"recharge_index", e.recharge_index},
                               {"ground_cluster", e.ground_cluster},
                               {"is_static", e.is_static},
                               {"ground_arc_m", e.ground_arc_m}});
    }
    return j.dump(2) + "\n";
}

RendezvousPlan plan_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("plan is not valid JSON: ") + e.what());
    }
    try {
        RendezvousPlan plan;
        plan.strategy = strategy_from_string(j.at("strategy").get<std::string>());
        const auto& cfg = j.at("config");
        plan.config.tmax_mode = tmax_mode_from_string(cfg.at("tmax_mode").get<std::string>());
        plan.config.budget_formula =
            budget_formula_from_string(cfg.at("budget_formula").get<std::string>());
        plan.config.recharge_s = cfg.at("recharge_s").get<double>();
        plan.t_max_s = j.at("t_max_s").get<double>();
        plan.aerial_budget_m = j.at("aerial_budget_m").get<double>();
        plan.ground_budget_m = j.at("ground_budget_m").get<double>();
        plan.L1_m = j.at("L1_m").get<double>();
        plan.L2_m = j.at("L2_m").get<double>();
        plan.aerial = path_from_json(j.at("aerial"));
        plan.ground = path_from_json(j.at("ground"));
        for (const auto& c : j.at("aerial_clusters")) plan.aerial_clusters.push_back(cluster_from_json(c));
        for (const auto& c : j.at("ground_clusters")) plan.ground_clusters.push_back(cluster_from_json(c));
        for (const auto& js : j.at("sorties")) {
            UavSortie s;
            s.aerial_cluster = js.at("aerial_cluster").get<int>();
            s.reversed = js.at("reversed").get<bool>();
            s.takeoff_arc_m = js.at("takeoff_arc_m").get<double>();
            s.flight_length_m = js.at("flight_length_m").get<double>();
            s.cover_begin = js.at("cover_begin").get<int>();
            s.cover_end = js.at("cover_end").get<int>();
            s.ride_in = points_from_json(js.at("ride_in"));
            s.flight = points_from_json(js.at("flight"));
            s.flight_transit = marks_from_json(js.at("flight_transit"));
            plan.sorties.push_back(std::move(s));
        }
        for (const auto& je : j.at("events")) {
            RendezvousEvent e;
            e.location = {je.at("location").at(0).get<double>(),
                          je.at("location").at(1).get<double>()};
            e.aerial_arrival_s = je.at("aerial_arrival_s").get<double>();
            e.ground_arrival_s = je.at("ground_arrival_s").get<double>();
            e.wait_s = je.at("wait_s").get<double>();
            e.recharge_index = je.at("recharge_index").get<int>();
            e.ground_cluster = je.at("ground_cluster").get<int>();
            e.is_static = je.at("is_static").get<bool>();
            e.ground_arc_m = je.at("ground_arc_m").get<double>();
            plan.events.push_back(e);
        }
        return plan;
    } catch (const json::exception& e) {
        throw ParseError(std::string("plan document malformed: ") + e.what());
    }
}

void save_plan(const RendezvousPlan& plan, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    out << plan_to_json(plan);
    if (!out) throw IoError("failed writing \"" + path + "\"");
}

RendezvousPlan load_plan(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return plan_from_json(buf.str());
}

std::string timeline_to_csv(const Timeline& timeline) {
    std::ostringstream out;
    out << "time_s,vehicle,x_m,y_m,state,energy_s\n";
    char buf[256];
    const auto rows = [&](const std::vector<TimelineSample>& samples, const char* vehicle) {
        for (const auto& s : samples) {
            std::snprintf(buf, sizeof(buf), "%.6f,%s,%.6f,%.6f,%s,", s.time_s, vehicle, s.pos.x,
                          s.pos.y, veh_state_name(s.state));
            out << buf;
            if (!std::isnan(s.energy_s)) {
                std::snprintf(buf, sizeof(buf), "%.6f", s.energy_s);
                out << buf;
            }
            out << '\n';
        }
    };
    rows(timeline.aerial, "aerial");
    rows(timeline.ground, "ground");
    return out.str();
}

std::string metrics_to_kv(const MissionMetrics& m) {
    std::ostringstream out;
    char buf[128];
    const auto kv = [&](const char* key, double v) {
        std::snprintf(buf, sizeof(buf), "%s=%.6f\n", key, v);
        out << buf;
    };
    kv("overhead", m.overhead);
    kv("total_wait_s", m.total_wait_s);
    out << "n_rendezvous=" << m.n_rendezvous << "\n";
    kv("L1_m", m.L1_m);
    kv("L2_m", m.L2_m);
    kv("coverage_aerial", m.coverage_aerial);
    kv("coverage_ground", m.coverage_ground);
    kv("mission_time_s", m.mission_time_s);
    return out.str();
}

std::string comparison_table_csv(const std::vector<ComparisonRecord>& records) {
    std::ostringstream out;
    out << "scenario,agcvg_ok,agcvg_overhead,agcvg_L1_m,agcvg_L2_m,agcvg_rendezvous,"
           "greedy_ok,greedy_overhead,greedy_L1_m,greedy_L2_m,greedy_rendezvous,gap_pp\n";
    char buf[256];
    const auto side = [&](const StrategyOutcome& o) {
        if (!o.feasible) {
            out << "0,,,,";
            return;
        }
        std::snprintf(buf, sizeof(buf), "1,%.6f,%.6f,%.6f,%d", o.metrics.overhead, o.metrics.L1_m,
                      o.metrics.L2_m, o.metrics.n_rendezvous);
        out << buf;
    };
    for (const auto& r : records) {
        out << r.scenario << ',';
        side(r.agcvg);
        out << ',';
        side(r.greedy);
        out << ',';
        if (r.agcvg.feasible && r.greedy.feasible) {
            std::snprintf(buf, sizeof(buf), "%.6f", r.gap_pp);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

double mean_gap_pp(const std::vector<ComparisonRecord>& records) {
    double sum = 0.0;
    int n = 0;
    for (const auto& r : records) {
        if (!r.agcvg.feasible || !r.greedy.feasible) continue;
        sum += r.gap_pp;
        ++n;
    }
    return n == 0 ? 0.0 : sum / n;
}

}  // namespace agcvg
