#include "bga/experiment.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bga/record_io.hpp"

namespace bga {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int crossover_index(CrossoverKind kind) { return static_cast<int>(kind); }
int policy_index(LocalSearchPolicy policy) { return static_cast<int>(policy); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, int n, CrossoverKind crossover,
                          LocalSearchPolicy policy, int run_index) {
    std::uint64_t h = splitmix64(base_seed ^ 0x42616c616e636564ULL);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ static_cast<std::uint64_t>(crossover_index(crossover) + 1));
    h = splitmix64(h ^ static_cast<std::uint64_t>(policy_index(policy) + 1));
    h = splitmix64(h ^ static_cast<std::uint64_t>(run_index + 1));
    return h;
}

std::string record_filename(int n, CrossoverKind crossover, LocalSearchPolicy policy,
                            int run_index) {
    char run[8];
    std::snprintf(run, sizeof(run), "%03d", run_index);
    return "n" + std::to_string(n) + "_" + std::string(crossover_key(crossover)) + "_" +
           std::string(policy_key(policy)) + "_run" + run + ".json";
}

GAConfig cell_config(const ExperimentPlan& plan, int n, CrossoverKind crossover,
                     LocalSearchPolicy policy, int run_index) {
    GAConfig config = plan.base;
    config.n = n;
    config.crossover = crossover;
    config.policy = policy;
    config.seed = derive_seed(plan.base_seed, n, crossover, policy, run_index);
    return config;
}

namespace {

struct PlannedRun {
    GAConfig config;
    std::filesystem::path path;
    std::string cell;
};

bool config_matches(const GAConfig& a, const GAConfig& b) {
    return a.n == b.n && a.population_size == b.population_size &&
           a.eval_budget == b.eval_budget && a.tournament_size == b.tournament_size &&
           a.mutation_probability == b.mutation_probability && a.crossover == b.crossover &&
           a.policy == b.policy && a.eval_counting == b.eval_counting && a.seed == b.seed;
}

// true when a valid record for exactly this configuration already exists
bool have_record(const PlannedRun& run) {
    if (!std::filesystem::exists(run.path)) return false;
    try {
        const auto record = read_run_record(run.path);
        return config_matches(record.config, run.config);
    } catch (const std::exception&) {
        return false;  // partial or foreign file: recompute
    }
}

void run_pool(const std::vector<const PlannedRun*>& todo, unsigned workers,
              const ProgressFn& progress) {
    std::atomic<std::size_t> next{0};
    std::mutex progress_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            const auto& run = *todo[i];
            const auto record = run_ga(run.config);
            write_run_record(run.path, record);
            if (progress) {
                std::scoped_lock lock(progress_mutex);
                progress(run.cell + " done, best fitness " +
                         std::to_string(record.best_fitness));
            }
        }
    };
    if (workers <= 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

}  // namespace

std::vector<MetricsRow> run_experiment(const ExperimentPlan& plan, const ProgressFn& progress) {
    if (plan.runs_per_cell < 1)
        throw std::invalid_argument("experiment: runs per cell must be positive");
    std::filesystem::create_directories(plan.out_dir);

    std::vector<PlannedRun> runs;
    for (int n : plan.ns)
        for (auto cx : plan.crossovers)
            for (auto ls : plan.policies)
                for (int r = 0; r < plan.runs_per_cell; ++r) {
                    PlannedRun run;
                    run.config = cell_config(plan, n, cx, ls, r);
                    run.config.validate();
                    run.path = plan.out_dir / record_filename(n, cx, ls, r);
                    run.cell = "n" + std::to_string(n) + " " +
                               std::string(crossover_key(cx)) + " " +
                               std::string(policy_key(ls)) + " run " + std::to_string(r);
                    runs.push_back(std::move(run));
                }

    std::vector<const PlannedRun*> todo;
    for (const auto& run : runs)
        if (!plan.resume || !have_record(run)) todo.push_back(&run);

    unsigned workers = plan.workers ? plan.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    run_pool(todo, workers, progress);

    // metrics assemble in canonical plan order regardless of which worker
    // finished when
    std::vector<MetricsRow> rows;
    rows.reserve(runs.size());
    for (const auto& run : runs) rows.push_back(metrics_row(read_run_record(run.path)));

    std::ofstream out(plan.out_dir / "metrics.csv", std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write metrics.csv");
    out << metrics_to_csv(rows);
    return rows;
}

namespace {

const std::vector<std::pair<CrossoverKind, LocalSearchPolicy>>& canonical_cells() {
    static const std::vector<std::pair<CrossoverKind, LocalSearchPolicy>> cells = [] {
        std::vector<std::pair<CrossoverKind, LocalSearchPolicy>> v;
        for (auto cx : {CrossoverKind::CounterBased, CrossoverKind::ZeroLength,
                        CrossoverKind::MapOfOnes})
            for (auto ls : {LocalSearchPolicy::None, LocalSearchPolicy::SingleStep,
                            LocalSearchPolicy::SteepestAscent})
                v.emplace_back(cx, ls);
        return v;
    }();
    return cells;
}

void write_text(const std::filesystem::path& path, const std::string& text,
                StatsOutputs& outputs) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    outputs.written.push_back(path);
}

void collect_borderline(const HeatmapMatrix& matrix, const std::string& metric, int n,
                        std::vector<std::string>& borderline) {
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = i + 1; j < matrix.size(); ++j) {
            const auto& cell = matrix[i][j];
            if (cell.p >= 0.01 && cell.p <= 0.10)
                borderline.push_back(metric + " n=" + std::to_string(n) + " " +
                                     label_string(cell.first) + " vs " +
                                     label_string(cell.second) + ": p=" +
                                     format_number(cell.p));
        }
}

}  // namespace

StatsOutputs emit_stats(const std::vector<MetricsRow>& rows, double alpha,
                        const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    StatsOutputs outputs;

    std::map<int, std::map<std::pair<int, int>, std::pair<std::vector<double>, std::vector<double>>>>
        by_n;  // n -> (cx, ls) -> (evals, distance)
    for (const auto& row : rows) {
        auto& cell = by_n[row.n][{static_cast<int>(row.crossover), static_cast<int>(row.policy)}];
        cell.first.push_back(static_cast<double>(row.evals_to_best));
        cell.second.push_back(row.median_pairwise_distance);
    }

    for (const auto& [n, cells] : by_n) {
        std::vector<SampleDistribution> evals, distance;
        bool complete = true;
        for (const auto& [cx, ls] : canonical_cells()) {
            const auto it = cells.find({static_cast<int>(cx), static_cast<int>(ls)});
            if (it == cells.end() || it->second.first.empty()) {
                outputs.missing_cells.push_back("(n=" + std::to_string(n) + ", " +
                                                std::string(crossover_key(cx)) + ", " +
                                                std::string(policy_key(ls)) + ")");
                complete = false;
                continue;
            }
            const SampleLabel label{cx, ls, n};
            evals.push_back({label, it->second.first});
            distance.push_back({label, it->second.second});
        }
        if (!complete) continue;

        const auto conv = heatmap_matrix(evals, alpha);
        const auto dist = heatmap_matrix(distance, alpha);
        const std::string suffix = "_n" + std::to_string(n) + ".csv";
        write_text(out_dir / ("heatmap_evals" + suffix), heatmap_to_csv(conv), outputs);
        write_text(out_dir / ("heatmap_distance" + suffix), heatmap_to_csv(dist), outputs);
        write_text(out_dir / ("boxplot_evals" + suffix), boxplots_to_csv(evals), outputs);
        write_text(out_dir / ("boxplot_distance" + suffix), boxplots_to_csv(distance), outputs);
        collect_borderline(conv, "evals-to-best", n, outputs.borderline);
        collect_borderline(dist, "median-distance", n, outputs.borderline);
    }
    return outputs;
}

}  // namespace bga
