#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bga/ga_engine.hpp"

namespace bga {

// Identifies one experimental cell.
struct SampleLabel {
    CrossoverKind crossover = CrossoverKind::CounterBased;
    LocalSearchPolicy policy = LocalSearchPolicy::None;
    int n = 0;
};

std::string label_string(const SampleLabel& label);  // "CX1-LS0"

// Per-run measurements of one cell, one value per completed run.
struct SampleDistribution {
    SampleLabel label;
    std::vector<double> values;
};

struct MwwTest {
    double u = 0;      // U statistic of the first sample, from midranks
    double p = 1;      // two-sided
    bool exact = false;
};

// Two-sided Mann-Whitney-Wilcoxon test. Exact enumeration over all rank
// assignments when both samples have at most 7 values; otherwise the normal
// approximation with tie and continuity corrections. All-tied input gives
// p = 1 by convention. Symmetric in the sample order.
MwwTest mann_whitney_u(std::span<const double> xs, std::span<const double> ys);

// One-sided p-value for the alternative "xs tends lower than ys".
double mann_whitney_less_p(std::span<const double> xs, std::span<const double> ys);

struct PairwiseTestResult {
    SampleLabel first;
    SampleLabel second;
    double u = 0;
    double p = 1;
    bool significant = false;  // p < alpha
};

using HeatmapMatrix = std::vector<std::vector<PairwiseTestResult>>;

// All pairwise two-sided tests among exactly nine cell distributions
// (canonical order CX1-LS0 ... CX3-LS2). Symmetric with a unit diagonal.
HeatmapMatrix heatmap_matrix(const std::vector<SampleDistribution>& samples, double alpha);

// Evaluation count at which the run's final best fitness first appeared:
// the last change-point of the timeline.
std::uint64_t evals_to_best(const RunRecord& record);

// Median over all pairwise Hamming distances of the population; the mean of
// the two central order statistics when the pair count is even. At least two
// individuals required.
double median_pairwise_distance(const std::vector<TruthTable>& population);

struct BoxplotSummary {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Five-number summary; quartiles by linear interpolation of order statistics.
BoxplotSummary boxplot_summary(std::span<const double> values);

// ---- comma-separated emission (full precision, locale independent) ----

std::string format_number(double v);

struct MetricsRow {
    int n = 0;
    CrossoverKind crossover = CrossoverKind::CounterBased;
    LocalSearchPolicy policy = LocalSearchPolicy::None;
    std::uint64_t seed = 0;
    int best_fitness = 0;
    std::uint64_t evals_to_best = 0;
    double median_pairwise_distance = 0;
};

MetricsRow metrics_row(const RunRecord& record);

std::string metrics_to_csv(const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> metrics_from_csv(const std::string& text);

std::string heatmap_to_csv(const HeatmapMatrix& matrix);
std::string boxplots_to_csv(const std::vector<SampleDistribution>& samples);

}  // namespace bga
