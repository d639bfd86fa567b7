#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "bga/analysis.hpp"
#include "bga/ga_engine.hpp"

namespace bga {

// Full experiment matrix: n values x crossovers x policies x runs, with seeds
// derived per run so any cell can be reproduced in isolation.
struct ExperimentPlan {
    std::vector<int> ns = {6, 7, 8, 9};
    std::vector<CrossoverKind> crossovers = {CrossoverKind::CounterBased,
                                             CrossoverKind::ZeroLength,
                                             CrossoverKind::MapOfOnes};
    std::vector<LocalSearchPolicy> policies = {LocalSearchPolicy::None,
                                               LocalSearchPolicy::SingleStep,
                                               LocalSearchPolicy::SteepestAscent};
    int runs_per_cell = 30;
    std::uint64_t base_seed = 1;
    GAConfig base;  // n, crossover, policy and seed are overwritten per run
    std::filesystem::path out_dir;
    unsigned workers = 0;  // 0 picks the hardware concurrency
    bool resume = true;
};

// Stable mix of the base seed with (n, crossover, policy, run index); the
// mapping never depends on execution order or worker count.
std::uint64_t derive_seed(std::uint64_t base_seed, int n, CrossoverKind crossover,
                          LocalSearchPolicy policy, int run_index);

std::string record_filename(int n, CrossoverKind crossover, LocalSearchPolicy policy,
                            int run_index);

GAConfig cell_config(const ExperimentPlan& plan, int n, CrossoverKind crossover,
                     LocalSearchPolicy policy, int run_index);

using ProgressFn = std::function<void(const std::string&)>;

// Executes every planned run on a bounded worker pool, skipping runs whose
// record file already exists with a matching configuration (resume), then
// writes the consolidated metrics table. Returns the metrics rows in
// canonical plan order.
std::vector<MetricsRow> run_experiment(const ExperimentPlan& plan,
                                       const ProgressFn& progress = {});

// Per-n statistics products derived from a metrics table.
struct StatsOutputs {
    std::vector<std::filesystem::path> written;
    std::vector<std::string> missing_cells;   // "(n=7, cx2, ls1)" for absent cells
    std::vector<std::string> borderline;      // comparisons with p in [0.01, 0.10]
};

// Emits, for every n with all nine cells present, the convergence and
// diversity heatmaps plus both boxplot summary tables. Missing cells are
// reported, not fabricated.
StatsOutputs emit_stats(const std::vector<MetricsRow>& rows, double alpha,
                        const std::filesystem::path& out_dir);

}  // namespace bga
