// pltr: energy-minimizing deadline scheduling on parallel processors
// with power-down. Subcommands: solve, check, compare, oracle, gantt,
// gen, bench.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pltr/flow.hpp"
#include "pltr/gantt.hpp"
#include "pltr/gen.hpp"
#include "pltr/io.hpp"
#include "pltr/model.hpp"
#include "pltr/oracle.hpp"
#include "pltr/pltr.hpp"
#include "pltr/schedule_build.hpp"
#include "pltr/volume.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

json certificate_json(const pltr::CutCertificate& cert) {
    return {{"kind", cert.kind == pltr::CutCertificate::Kind::Deficiency
                         ? "deficiency"
                         : "excess"},
            {"Q", cert.witness},
            {"value", cert.value}};
}

pltr::Instance load_validated(const std::string& path) {
    pltr::Instance instance = pltr::io::load_instance(path);
    pltr::ValidationReport report = pltr::validate_instance(instance);
    if (!report.structurally_ok()) {
        json errors = json::array();
        for (const auto& v : report.violations)
            if (v.structural)
                errors.push_back({{"job", v.job_id}, {"message", v.message}});
        std::cerr << json{{"error", "invalid instance"}, {"violations", errors}}
                         .dump(2)
                  << "\n";
        throw pltr::Error("invalid instance");
    }
    return instance;
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("PLTR_SEED")) return std::stoull(env);
    return seed;
}

long long call_budget(const pltr::Instance& instance) {
    if (instance.empty()) return 1;
    long long n = static_cast<long long>(instance.jobs.size());
    long long log_term =
        static_cast<long long>(std::ceil(std::log2(instance.horizon_end() + 2.0)));
    return 2 * (n + instance.effective_m()) * (log_term + 2);
}

struct GenFlags {
    pltr::GenSpec spec;
    bool feasible_only = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--gen-n", spec.n, "jobs per generated instance");
        cmd->add_option("--gen-m", spec.m, "processor count");
        cmd->add_option("--gen-q", spec.q, "wake-up cost");
        cmd->add_option("--gen-d", spec.horizon, "last slot index d");
        cmd->add_option("--gen-vmin", spec.volume_min, "minimum job volume");
        cmd->add_option("--gen-vmax", spec.volume_max, "maximum job volume");
        cmd->add_option("--gen-smin", spec.slack_min, "minimum deadline slack");
        cmd->add_option("--gen-smax", spec.slack_max, "maximum deadline slack");
        cmd->add_option("--seed", spec.seed, "generator seed (PLTR_SEED overrides)");
        cmd->add_flag("--feasible-only", feasible_only,
                      "regenerate until the instance is feasible");
    }

    pltr::Instance draw(std::mt19937_64& rng) const {
        for (;;) {
            pltr::Instance instance = pltr::generate(spec, rng);
            if (!feasible_only) return instance;
            auto bounds = pltr::BoundProfile::uniform(instance.horizon_size(), 0,
                                                      instance.m);
            if (pltr::is_feasible(instance, bounds)) return instance;
        }
    }
};

int cmd_solve(const std::string& instance_path, bool diagnostics,
              const std::string& schedule_out, const std::string& gantt_out) {
    pltr::Instance instance = load_validated(instance_path);
    try {
        pltr::PltrOptions options;
        options.diagnostics = diagnostics;
        pltr::PltrResult result = pltr::run(instance, options);
        auto [schedule, cost] = pltr::schedule_from_result(instance, result);

        json summary{{"cost", cost.total},
                     {"busy", cost.busy},
                     {"feasibility_calls", result.feasibility_calls},
                     {"busy_intervals", result.busy_interval_count},
                     {"engagements", json::array()}};
        for (const auto& e : result.engagements)
            summary["engagements"].push_back(
                {{"k", e.processor}, {"t", e.slot + instance.offset}});
        if (diagnostics) {
            auto tightness = pltr::engagement_tightness_check(result, instance);
            summary["engagement_tightness_ok"] = tightness.ok();
        }
        std::cout << summary.dump(2) << "\n";

        std::string schedule_json = pltr::io::schedule_to_json(
            schedule, cost, instance.q, instance.offset);
        if (!schedule_out.empty()) pltr::io::write_file(schedule_out, schedule_json);
        if (!gantt_out.empty())
            pltr::io::write_file(gantt_out,
                                 pltr::render_gantt_svg(schedule, instance.q));
        return kExitOk;
    } catch (const pltr::InfeasibleError& e) {
        std::cout << json{{"infeasible", true},
                          {"certificate", certificate_json(e.certificate)}}
                         .dump(2)
                  << "\n";
        return kExitInfeasible;
    }
}

int cmd_check(const std::string& instance_path, const std::string& bounds_path) {
    pltr::Instance instance = load_validated(instance_path);
    pltr::BoundProfile bounds;
    if (!bounds_path.empty()) {
        bounds = pltr::io::load_bounds(bounds_path);
        if (instance.empty()) {
            // horizon comes from the bounds file
        } else if (bounds.end() < instance.horizon_size()) {
            throw pltr::Error("bounds do not cover the horizon");
        }
    } else {
        bounds = pltr::BoundProfile::uniform(
            instance.empty() ? 0 : instance.horizon_size(), 0, instance.m);
    }

    pltr::FeasibilityResult verdict = pltr::check_feasible(instance, bounds);
    json out{{"feasible", verdict.feasible},
             {"flow_value", verdict.flow_value},
             {"total_volume", instance.total_volume()}};
    if (!verdict.feasible) out["certificate"] = certificate_json(*verdict.certificate);
    std::cout << out.dump(2) << "\n";
    return verdict.feasible ? kExitOk : kExitInfeasible;
}

int cmd_compare(const std::string& instance_path, const GenFlags& gen,
                int trials) {
    json rows = json::array();
    bool all_ok = true;

    auto add_row = [&](const pltr::Instance& instance, int trial) {
        try {
            pltr::ApproximationReport report = pltr::approximation_report(instance);
            rows.push_back({{"trial", trial},
                            {"pltr_cost", report.pltr_cost},
                            {"opt_cost", report.opt_cost},
                            {"P", report.total_volume},
                            {"bound", 2 * report.opt_cost + report.total_volume},
                            {"bound_ok", report.bound_ok},
                            {"ratio", std::to_string(report.ratio.num) + "/" +
                                          std::to_string(report.ratio.den)}});
            all_ok = all_ok && report.bound_ok;
        } catch (const pltr::InfeasibleError&) {
            rows.push_back({{"trial", trial}, {"skipped", "infeasible"}});
        } catch (const pltr::Error& e) {
            rows.push_back({{"trial", trial}, {"skipped", e.what()}});
        }
    };

    if (!instance_path.empty()) {
        add_row(load_validated(instance_path), 0);
    } else {
        std::mt19937_64 rng(effective_seed(gen.spec.seed));
        for (int i = 0; i < trials; ++i) add_row(gen.draw(rng), i);
    }
    std::cout << json{{"rows", rows}, {"all_bound_ok", all_ok}}.dump(2) << "\n";
    return all_ok ? kExitOk : kExitInfeasible;
}

int cmd_oracle(const std::string& instance_path) {
    pltr::Instance instance = load_validated(instance_path);
    try {
        pltr::OptResult opt = pltr::brute_force_opt(instance);
        pltr::CostBreakdown cost = pltr::compute_cost(opt.schedule, instance.q);
        json out{{"opt_cost", opt.cost},
                 {"profile", opt.profile.counts},
                 {"schedule", json::parse(pltr::io::schedule_to_json(
                      opt.schedule, cost, instance.q, instance.offset))}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const pltr::InfeasibleError& e) {
        std::cout << json{{"infeasible", true},
                          {"certificate", certificate_json(e.certificate)}}
                         .dump(2)
                  << "\n";
        return kExitInfeasible;
    }
}

int cmd_gantt(const std::string& schedule_path, const std::string& out_path) {
    pltr::io::ParsedSchedule parsed = pltr::io::load_schedule(schedule_path);
    pltr::io::write_file(out_path,
                         pltr::render_gantt_svg(parsed.schedule, parsed.q));
    return kExitOk;
}

int cmd_gen(const GenFlags& gen, const std::string& out_path) {
    GenFlags copy = gen;
    copy.spec.seed = effective_seed(gen.spec.seed);
    std::mt19937_64 rng(copy.spec.seed);
    std::string text = pltr::io::instance_to_json(copy.draw(rng));
    if (out_path.empty())
        std::cout << text;
    else
        pltr::io::write_file(out_path, text);
    return kExitOk;
}

int cmd_bench(const GenFlags& gen, int trials) {
    std::mt19937_64 rng(effective_seed(gen.spec.seed));
    json rows = json::array();
    bool all_ok = true;

    for (int i = 0; i < trials; ++i) {
        pltr::Instance instance = gen.draw(rng);
        json row{{"trial", i}, {"n", instance.jobs.size()}};
        auto started = std::chrono::steady_clock::now();
        try {
            pltr::PltrResult result = pltr::run(instance);
            auto elapsed = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - started)
                               .count();
            bool calls_ok = result.feasibility_calls <= call_budget(instance);
            bool intervals_ok = result.busy_interval_count <=
                                static_cast<int>(instance.jobs.size());
            row["feasibility_calls"] = result.feasibility_calls;
            row["call_budget"] = call_budget(instance);
            row["busy_intervals"] = result.busy_interval_count;
            row["wall_ms"] = elapsed;
            row["calls_ok"] = calls_ok;
            row["intervals_ok"] = intervals_ok;
            all_ok = all_ok && calls_ok && intervals_ok;
        } catch (const pltr::InfeasibleError&) {
            row["skipped"] = "infeasible";
        }
        rows.push_back(row);
    }
    std::cout << json{{"rows", rows}, {"all_ok", all_ok}}.dump(2) << "\n";
    return all_ok ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel Left-to-Right energy-minimizing deadline scheduler"};
    app.require_subcommand(1);

    std::string instance_path, bounds_path, schedule_out, gantt_out, out_path;
    bool diagnostics = false;
    int trials = 10;

    auto* solve = app.add_subcommand("solve", "run the greedy solver");
    solve->add_option("instance", instance_path, "instance JSON")->required();
    solve->add_flag("--diagnostics", diagnostics, "record bound snapshots");
    solve->add_option("--schedule-out", schedule_out, "write schedule JSON here");
    solve->add_option("--gantt-out", gantt_out, "write Gantt SVG here");

    auto* check = app.add_subcommand("check", "feasibility check with certificate");
    check->add_option("instance", instance_path, "instance JSON")->required();
    check->add_option("--bounds", bounds_path, "bound profile JSON");

    GenFlags compare_gen;
    auto* compare = app.add_subcommand("compare", "greedy vs brute-force optimum");
    compare->add_option("instance", instance_path, "instance JSON (omit to generate)");
    compare->add_option("--trials", trials, "number of generated instances");
    compare_gen.attach(compare);

    auto* oracle = app.add_subcommand("oracle", "brute-force optimal schedule");
    oracle->add_option("instance", instance_path, "instance JSON")->required();

    auto* gantt = app.add_subcommand("gantt", "render schedule JSON as SVG");
    gantt->add_option("schedule", instance_path, "schedule JSON")->required();
    gantt->add_option("out", out_path, "output SVG path")->required();

    GenFlags gen_gen;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--out", out_path, "output path (stdout otherwise)");
    gen_gen.attach(gen);

    GenFlags bench_gen;
    auto* bench = app.add_subcommand("bench", "counter checks on random instances");
    bench->add_option("--trials", trials, "number of generated instances");
    bench_gen.attach(bench);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(instance_path, diagnostics, schedule_out, gantt_out);
        if (check->parsed()) return cmd_check(instance_path, bounds_path);
        if (compare->parsed())
            return cmd_compare(compare->count("instance") > 0 ? instance_path : "",
                               compare_gen, trials);
        if (oracle->parsed()) return cmd_oracle(instance_path);
        if (gantt->parsed()) return cmd_gantt(instance_path, out_path);
        if (gen->parsed()) return cmd_gen(gen_gen, out_path);
        if (bench->parsed()) return cmd_bench(bench_gen, trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
