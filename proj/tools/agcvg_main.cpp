// Command-line front end: plan / simulate / compare / render / export.
// Exit codes: 0 ok, 2 bad input or validation, 3 infeasible or exhausted
// mid-flight, 4 file I/O, 1 anything else.
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "agcvg/errors.hpp"
#include "agcvg/metrics.hpp"
#include "agcvg/mission_export.hpp"
#include "agcvg/plan_io.hpp"
#include "agcvg/planner.hpp"
#include "agcvg/scenario.hpp"
#include "agcvg/simulator.hpp"
#include "agcvg/svg_render.hpp"

namespace fs = std::filesystem;
using namespace agcvg;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    out << content;
    if (!out) throw IoError("failed writing \"" + path + "\"");
}

struct CommonOpts {
    std::string scenario_path;
    std::string strategy = "agcvg";
    std::string tmax_mode = "nearest";
    std::string budget_formula = "T_minus_2tmax";
    double recharge_s = 0.0;
    std::string out_dir = ".";
};

PlanConfig make_config(const CommonOpts& o) {
    PlanConfig cfg;
    if (o.tmax_mode == "bottleneck")
        cfg.tmax_mode = TmaxMode::bottleneck;
    else if (o.tmax_mode == "min_cost_max_edge")
        cfg.tmax_mode = TmaxMode::min_cost_max_edge;
    else
        cfg.tmax_mode = TmaxMode::nearest;
    cfg.budget_formula = o.budget_formula == "T_minus_tmax" ? BudgetFormula::T_minus_tmax
                                                            : BudgetFormula::T_minus_2tmax;
    cfg.recharge_s = o.recharge_s;
    return cfg;
}

std::vector<Strategy> strategies_of(const std::string& s) {
    if (s == "both") return {Strategy::agcvg, Strategy::greedy};
    if (s == "greedy") return {Strategy::greedy};
    return {Strategy::agcvg};
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_strategy) {
    cmd->add_option("-s,--scenario", o.scenario_path, "Scenario JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    if (with_strategy)
        cmd->add_option("--strategy", o.strategy, "Planning strategy (default: agcvg)")
            ->check(CLI::IsMember({"agcvg", "greedy", "both"}));
    cmd->add_option("--tmax-mode", o.tmax_mode,
                    "Rendezvous time bound: nearest, bottleneck, min_cost_max_edge "
                    "(default: nearest)")
        ->check(CLI::IsMember({"nearest", "bottleneck", "min_cost_max_edge"}));
    cmd->add_option("--budget-formula", o.budget_formula,
                    "Per-charge travel budget: T_minus_2tmax or T_minus_tmax "
                    "(default: T_minus_2tmax)")
        ->check(CLI::IsMember({"T_minus_2tmax", "T_minus_tmax"}));
    cmd->add_option("--recharge-s", o.recharge_s, "Recharge duration in seconds (default: 0)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("-o,--out-dir", o.out_dir, "Output directory (default: .)");
}

std::string plan_path(const CommonOpts& o, const Scenario& sc, Strategy st) {
    return o.out_dir + "/" + sc.name + "." + strategy_name(st) + ".plan.json";
}

int run_plan(const CommonOpts& o, bool render) {
    const Scenario sc = load_scenario(o.scenario_path);
    const PlanConfig cfg = make_config(o);
    for (Strategy st : strategies_of(o.strategy)) {
        const RendezvousPlan plan = plan_route(sc, st, cfg);
        const std::string path = plan_path(o, sc, st);
        save_plan(plan, path);
        std::printf("%s: t_max=%.3f s, per-charge budget=%.3f m, %zu aerial clusters, "
                    "%zu sorties, overhead=%.4f\n",
                    strategy_name(st), plan.t_max_s, plan.aerial_budget_m,
                    plan.aerial_clusters.size(), plan.sorties.size(), plan_overhead(plan));
        std::printf("wrote %s\n", path.c_str());
        if (render) {
            const std::string svg_path =
                o.out_dir + "/" + sc.name + "." + strategy_name(st) + ".svg";
            write_file(svg_path, render_svg(sc, &plan));
            std::printf("wrote %s\n", svg_path.c_str());
        }
    }
    return 0;
}

int run_simulate(const CommonOpts& o, const std::string& plan_file) {
    const Scenario sc = load_scenario(o.scenario_path);
    for (Strategy st : strategies_of(o.strategy)) {
        const RendezvousPlan plan =
            plan_file.empty() ? plan_route(sc, st, make_config(o)) : load_plan(plan_file);
        const Timeline tl = simulate(plan, sc);
        const std::string path =
            o.out_dir + "/" + sc.name + "." + strategy_name(plan.strategy) + ".timeline.csv";
        write_file(path, timeline_to_csv(tl));
        std::printf("# %s\n", strategy_name(plan.strategy));
        std::fputs(metrics_to_kv(compute_metrics(plan, tl, sc)).c_str(), stdout);
        std::printf("wrote %s\n", path.c_str());
        if (!plan_file.empty()) break;  // an explicit plan overrides --strategy fan-out
    }
    return 0;
}

int run_render(const CommonOpts& o, const std::string& plan_file) {
    const Scenario sc = load_scenario(o.scenario_path);
    RendezvousPlan plan;
    const RendezvousPlan* plan_ptr = nullptr;
    std::string suffix = "";
    if (!plan_file.empty()) {
        plan = load_plan(plan_file);
        plan_ptr = &plan;
        suffix = std::string(".") + strategy_name(plan.strategy);
    }
    const std::string path = o.out_dir + "/" + sc.name + suffix + ".svg";
    write_file(path, render_svg(sc, plan_ptr));
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_export(const CommonOpts& o, const std::string& plan_file, const std::string& frame_tag) {
    const Scenario sc = load_scenario(o.scenario_path);
    if (frame_tag != "ugv_rhr" && frame_tag != "uav_lhr")
        throw ValidationError("unknown frame \"" + frame_tag + "\"");
    const Frame frame = frame_tag == "ugv_rhr" ? Frame::ugv_rhr : Frame::uav_lhr;
    const RendezvousPlan plan = plan_file.empty()
                                    ? plan_route(sc, strategies_of(o.strategy)[0], make_config(o))
                                    : load_plan(plan_file);
    const std::string path = o.out_dir + "/" + sc.name + "." + frame_tag + ".mission.csv";
    write_file(path, export_mission(plan, sc, frame));
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_compare(const std::string& dir, const CommonOpts& o, const std::string& out_csv,
                int jobs) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ValidationError("no scenario files (*.json) in \"" + dir + "\"");

    const PlanConfig cfg = make_config(o);
    std::vector<ComparisonRecord> records(files.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
            try {
                records[i] = compare_strategies(load_scenario(files[i].string()), cfg);
            } catch (const Error& e) {  // unreadable scenario: mark the row, keep going
                records[i].scenario = files[i].stem().string();
                records[i].agcvg.error = e.what();
                records[i].greedy.error = e.what();
            }
        }
    };
    unsigned n = std::thread::hardware_concurrency();
    if (jobs > 0) n = static_cast<unsigned>(jobs);
    n = std::max(1u, std::min<unsigned>(n, files.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    const std::string csv = comparison_table_csv(records);
    std::fputs(csv.c_str(), stdout);
    if (!out_csv.empty()) {
        write_file(out_csv, csv);
        std::printf("wrote %s\n", out_csv.c_str());
    }
    int both = 0;
    for (const auto& r : records)
        if (r.agcvg.feasible && r.greedy.feasible) ++both;
    std::printf("mean_gap_pp=%.6f over %d/%zu scenarios\n", mean_gap_pp(records), both,
                records.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete-coverage planning for an energy-limited aerial vehicle recharging "
                 "on a moving ground vehicle"};
    app.require_subcommand(1);

    CommonOpts opt;
    bool render_flag = false;
    std::string plan_file;
    std::string frame_tag = "ugv_rhr";
    std::string compare_dir;
    std::string compare_csv;
    int jobs = 0;

    CLI::App* cmd_plan = app.add_subcommand("plan", "Compute coverage paths and rendezvous");
    add_common(cmd_plan, opt, true);
    cmd_plan->add_flag("--render", render_flag, "Also write an SVG of each plan");

    CLI::App* cmd_sim = app.add_subcommand("simulate", "Execute a plan on a shared clock");
    add_common(cmd_sim, opt, true);
    cmd_sim->add_option("-p,--plan", plan_file, "Existing plan JSON (else plans in-process)")
        ->check(CLI::ExistingFile);

    CLI::App* cmd_cmp = app.add_subcommand("compare", "Run both strategies over a scenario dir");
    cmd_cmp->add_option("-d,--dir", compare_dir, "Directory of scenario JSON files")
        ->required()
        ->check(CLI::ExistingDirectory);
    cmd_cmp->add_option("--csv", compare_csv, "Also write the table to this CSV file");
    cmd_cmp->add_option("-j,--jobs", jobs, "Worker threads (default: hardware)");
    cmd_cmp->add_option("--tmax-mode", opt.tmax_mode, "nearest, bottleneck, min_cost_max_edge")
        ->check(CLI::IsMember({"nearest", "bottleneck", "min_cost_max_edge"}));
    cmd_cmp->add_option("--budget-formula", opt.budget_formula,
                        "T_minus_2tmax or T_minus_tmax")
        ->check(CLI::IsMember({"T_minus_2tmax", "T_minus_tmax"}));
    cmd_cmp->add_option("--recharge-s", opt.recharge_s, "Recharge duration in seconds")
        ->check(CLI::NonNegativeNumber);

    CLI::App* cmd_render = app.add_subcommand("render", "Draw a scenario (and a plan) as SVG");
    add_common(cmd_render, opt, false);
    cmd_render->add_option("-p,--plan", plan_file, "Plan JSON to overlay")
        ->check(CLI::ExistingFile);

    CLI::App* cmd_export = app.add_subcommand("export", "Write a field mission waypoint CSV");
    add_common(cmd_export, opt, true);
    cmd_export->add_option("-p,--plan", plan_file, "Existing plan JSON (else plans in-process)")
        ->check(CLI::ExistingFile);
    cmd_export->add_option("-f,--frame", frame_tag, "ugv_rhr or uav_lhr (default: ugv_rhr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_plan->parsed()) return run_plan(opt, render_flag);
        if (cmd_sim->parsed()) return run_simulate(opt, plan_file);
        if (cmd_cmp->parsed()) return run_compare(compare_dir, opt, compare_csv, jobs);
        if (cmd_render->parsed()) return run_render(opt, plan_file);
        if (cmd_export->parsed()) return run_export(opt, plan_file, frame_tag);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InfeasibleError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return 3;
    } catch (const SimulationError& e) {
        std::fprintf(stderr, "simulation failed: %s\n", e.what());
        return 3;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
