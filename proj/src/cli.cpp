#include "bga/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bga/experiment.hpp"
#include "bga/record_io.hpp"

namespace bga {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct RunArgs {
    GAConfig config;
    std::string crossover = "cx1";
    std::string policy = "ls0";
    std::string counting = "applied-only";
    std::string out_dir = ".";
};

void apply_keys(GAConfig& config, const std::string& crossover, const std::string& policy,
                const std::string& counting) {
    const auto cx = parse_crossover(crossover);
    const auto ls = parse_policy(policy);
    const auto ec = parse_eval_counting(counting);
    if (!cx) throw CLI::ValidationError("--crossover", "unknown operator " + crossover);
    if (!ls) throw CLI::ValidationError("--ls", "unknown policy " + policy);
    if (!ec) throw CLI::ValidationError("--eval-counting", "unknown policy " + counting);
    config.crossover = *cx;
    config.policy = *ls;
    config.eval_counting = *ec;
}

void add_ga_options(CLI::App& cmd, GAConfig& config) {
    cmd.add_option("--budget", config.eval_budget, "Fitness evaluation budget")
        ->capture_default_str();
    cmd.add_option("--pop", config.population_size, "Population size")->capture_default_str();
    cmd.add_option("--tournament", config.tournament_size, "Tournament size")
        ->capture_default_str();
    cmd.add_option("--mut-prob", config.mutation_probability, "Mutation probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
}

int cmd_run(const RunArgs& args) {
    const auto start = std::chrono::steady_clock::now();
    const auto record = run_ga(args.config);
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::filesystem::create_directories(args.out_dir);
    const auto path =
        std::filesystem::path(args.out_dir) /
        ("run_n" + std::to_string(args.config.n) + "_" +
         std::string(crossover_key(args.config.crossover)) + "_" +
         std::string(policy_key(args.config.policy)) + "_seed" +
         std::to_string(args.config.seed) + ".json");
    write_run_record(path, record);

    std::cout << "best fitness:  " << record.best_fitness << "\n"
              << "evals to best: " << record.evals_to_best << "\n"
              << "best table:    " << to_hex(record.best_table) << "\n"
              << "wall time:     " << format_number(elapsed) << " s\n"
              << "record:        " << path.string() << "\n";
    return kExitOk;
}

int cmd_experiment(ExperimentPlan& plan, const std::vector<int>& ns,
                   const std::vector<std::string>& crossovers,
                   const std::vector<std::string>& policies) {
    plan.ns = ns;
    plan.crossovers.clear();
    for (const auto& key : crossovers) {
        const auto cx = parse_crossover(key);
        if (!cx) throw CLI::ValidationError("--crossover", "unknown operator " + key);
        plan.crossovers.push_back(*cx);
    }
    plan.policies.clear();
    for (const auto& key : policies) {
        const auto ls = parse_policy(key);
        if (!ls) throw CLI::ValidationError("--ls", "unknown policy " + key);
        plan.policies.push_back(*ls);
    }

    const std::size_t total = plan.ns.size() * plan.crossovers.size() * plan.policies.size() *
                              static_cast<std::size_t>(plan.runs_per_cell);
    std::cout << "experiment: " << total << " runs into " << plan.out_dir.string() << "\n";
    std::size_t done = 0;
    const auto rows = run_experiment(plan, [&](const std::string& message) {
        ++done;
        std::cout << "[" << done << "] " << message << "\n";
    });
    std::cout << "metrics table: " << (plan.out_dir / "metrics.csv").string() << " ("
              << rows.size() << " rows)\n";
    return kExitOk;
}

int cmd_stats(const std::string& metrics_path, double alpha, const std::string& out_dir) {
    std::ifstream in(metrics_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + metrics_path);
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    const auto rows = metrics_from_csv(text);
    const auto outputs = emit_stats(rows, alpha, out_dir);

    for (const auto& path : outputs.written) std::cout << "wrote " << path.string() << "\n";
    if (!outputs.missing_cells.empty()) {
        std::cout << "missing cells:\n";
        for (const auto& cell : outputs.missing_cells) std::cout << "  " << cell << "\n";
    }
    if (!outputs.borderline.empty()) {
        std::cout << "borderline p-values (0.01..0.10), significance calls may be fragile:\n";
        for (const auto& line : outputs.borderline) std::cout << "  " << line << "\n";
    }
    if (outputs.written.empty()) {
        std::cerr << "error: no value of n has all nine cells\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Balanced-GA harness for evolving highly nonlinear balanced Boolean functions"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value file (flags win)");

    // run
    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Execute a single seeded GA run");
    run->add_option("--n", run_args.config.n, "Number of Boolean variables")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    run->add_option("--crossover", run_args.crossover, "Crossover operator (cx1|cx2|cx3)")
        ->capture_default_str();
    run->add_option("--ls", run_args.policy, "Local search policy (ls0|ls1|ls2)")
        ->capture_default_str();
    run->add_option("--seed", run_args.config.seed, "Run seed")->capture_default_str();
    run->add_option("--eval-counting", run_args.counting,
                    "Budget accounting (applied-only|offspring-only|all-probes)")
        ->capture_default_str();
    run->add_option("--out", run_args.out_dir, "Output directory")->capture_default_str();
    run->add_flag("--check-invariants", run_args.config.check_invariants,
                  "Validate every inserted individual during the run");
    add_ga_options(*run, run_args.config);

    // experiment
    ExperimentPlan plan;
    std::vector<int> exp_ns = plan.ns;
    std::vector<std::string> exp_cx = {"cx1", "cx2", "cx3"};
    std::vector<std::string> exp_ls = {"ls0", "ls1", "ls2"};
    std::string exp_counting = "applied-only";
    std::string exp_out = "experiment_out";
    auto* experiment = app.add_subcommand("experiment", "Execute the full experiment matrix");
    experiment->add_option("--n", exp_ns, "Problem sizes")
        ->delimiter(',')
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    experiment->add_option("--crossover", exp_cx, "Crossover operators")
        ->delimiter(',')
        ->capture_default_str();
    experiment->add_option("--ls", exp_ls, "Local search policies")
        ->delimiter(',')
        ->capture_default_str();
    experiment->add_option("--runs", plan.runs_per_cell, "Runs per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    experiment->add_option("--base-seed", plan.base_seed, "Base seed for derivation")
        ->capture_default_str();
    experiment->add_option("--eval-counting", exp_counting,
                           "Budget accounting (applied-only|offspring-only|all-probes)")
        ->capture_default_str();
    experiment->add_option("--workers", plan.workers, "Worker threads (0 = hardware)")
        ->capture_default_str();
    experiment->add_option("--out", exp_out, "Output directory")->capture_default_str();
    experiment->add_flag("--resume,!--no-resume", plan.resume,
                         "Skip runs whose record already exists")
        ->capture_default_str();
    add_ga_options(*experiment, plan.base);

    // stats
    std::string stats_metrics = "experiment_out/metrics.csv";
    std::string stats_out = "stats_out";
    double alpha = 0.05;
    auto* stats = app.add_subcommand("stats", "Emit heatmap and boxplot tables from metrics");
    stats->add_option("--metrics", stats_metrics, "Path to the metrics table")
        ->capture_default_str();
    stats->add_option("--alpha", alpha, "Significance level")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    stats->add_option("--out", stats_out, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            apply_keys(run_args.config, run_args.crossover, run_args.policy, run_args.counting);
            run_args.config.validate();
            return cmd_run(run_args);
        }
        if (experiment->parsed()) {
            const auto ec = parse_eval_counting(exp_counting);
            if (!ec)
                throw CLI::ValidationError("--eval-counting", "unknown policy " + exp_counting);
            plan.base.eval_counting = *ec;
            plan.out_dir = exp_out;
            return cmd_experiment(plan, exp_ns, exp_cx, exp_ls);
        }
        if (stats->parsed()) return cmd_stats(stats_metrics, alpha, stats_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace bga
