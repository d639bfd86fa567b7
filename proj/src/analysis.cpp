#include "bga/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bga {

std::string label_string(const SampleLabel& label) {
    std::string out(crossover_key(label.crossover));
    out += "-";
    out += policy_key(label.policy);
    for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

namespace {

struct RankedSamples {
    std::vector<double> midranks;  // combined, value-sorted
    std::vector<std::uint8_t> from_first;
    double tie_term = 0;  // sum over tie groups of t^3 - t
};

RankedSamples rank_combined(std::span<const double> xs, std::span<const double> ys) {
    struct Entry {
        double value;
        std::uint8_t first;
    };
    std::vector<Entry> entries;
    entries.reserve(xs.size() + ys.size());
    for (double v : xs) entries.push_back({v, 1});
    for (double v : ys) entries.push_back({v, 0});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.value < b.value; });

    RankedSamples out;
    out.midranks.resize(entries.size());
    out.from_first.resize(entries.size());
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].value == entries[i].value) ++j;
        const double mid = 0.5 * static_cast<double>(i + 1 + j);  // average of ranks i+1 .. j
        const double t = static_cast<double>(j - i);
        out.tie_term += t * t * t - t;
        for (std::size_t k = i; k < j; ++k) out.midranks[k] = mid;
        i = j;
    }
    for (std::size_t k = 0; k < entries.size(); ++k) out.from_first[k] = entries[k].first;
    return out;
}

double u_from_ranks(const RankedSamples& ranked, std::size_t n1) {
    double rank_sum = 0;
    for (std::size_t k = 0; k < ranked.midranks.size(); ++k)
        if (ranked.from_first[k]) rank_sum += ranked.midranks[k];
    return rank_sum - 0.5 * static_cast<double>(n1) * static_cast<double>(n1 + 1);
}

constexpr double kRankEps = 1e-9;

// Walks every size-n1 subset of the combined midranks, reporting each
// assignment's U value. Group sizes stay small (<= 7 per sample).
template <typename Fn>
void for_each_assignment_u(const std::vector<double>& midranks, std::size_t n1, Fn&& fn) {
    const std::size_t total = midranks.size();
    std::vector<std::size_t> pick(n1);
    const double offset = 0.5 * static_cast<double>(n1) * static_cast<double>(n1 + 1);
    auto recurse = [&](auto&& self, std::size_t next, std::size_t depth, double sum) -> void {
        if (depth == n1) {
            fn(sum - offset);
            return;
        }
        for (std::size_t i = next; i + (n1 - depth) <= total; ++i)
            self(self, i + 1, depth + 1, sum + midranks[i]);
    };
    recurse(recurse, 0, 0, 0.0);
}

double normal_two_sided_p(double u, double mu, double sd) {
    if (sd <= 0) return 1.0;
    double z = (std::abs(u - mu) - 0.5) / sd;  // continuity correction
    if (z < 0) z = 0;
    const double p = std::erfc(z / std::sqrt(2.0));
    return std::min(p, 1.0);
}

double tie_corrected_sd(std::size_t n1, std::size_t n2, double tie_term) {
    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double total = dn1 + dn2;
    double var = dn1 * dn2 / 12.0 * (total + 1.0 - tie_term / (total * (total - 1.0)));
    if (var < 0) var = 0;
    return std::sqrt(var);
}

}  // namespace

MwwTest mann_whitney_u(std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty() || ys.empty())
        throw std::invalid_argument("mann-whitney: samples must be nonempty");
    const auto ranked = rank_combined(xs, ys);
    const double u = u_from_ranks(ranked, xs.size());
    const double mu = 0.5 * static_cast<double>(xs.size()) * static_cast<double>(ys.size());

    MwwTest result;
    result.u = u;
    if (xs.size() <= 7 && ys.size() <= 7) {
        result.exact = true;
        const double observed = std::abs(u - mu);
        std::size_t extreme = 0, total = 0;
        for_each_assignment_u(ranked.midranks, xs.size(), [&](double u_s) {
            ++total;
            if (std::abs(u_s - mu) >= observed - kRankEps) ++extreme;
        });
        result.p = static_cast<double>(extreme) / static_cast<double>(total);
    } else {
        result.exact = false;
        result.p = normal_two_sided_p(u, mu, tie_corrected_sd(xs.size(), ys.size(), ranked.tie_term));
    }
    return result;
}

double mann_whitney_less_p(std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty() || ys.empty())
        throw std::invalid_argument("mann-whitney: samples must be nonempty");
    const auto ranked = rank_combined(xs, ys);
    const double u = u_from_ranks(ranked, xs.size());
    if (xs.size() <= 7 && ys.size() <= 7) {
        std::size_t low = 0, total = 0;
        for_each_assignment_u(ranked.midranks, xs.size(), [&](double u_s) {
            ++total;
            if (u_s <= u + kRankEps) ++low;
        });
        return static_cast<double>(low) / static_cast<double>(total);
    }
    const double mu = 0.5 * static_cast<double>(xs.size()) * static_cast<double>(ys.size());
    const double sd = tie_corrected_sd(xs.size(), ys.size(), ranked.tie_term);
    if (sd <= 0) return 1.0;
    const double z = (u - mu + 0.5) / sd;
    return std::min(0.5 * std::erfc(-z / std::sqrt(2.0)), 1.0);
}

HeatmapMatrix heatmap_matrix(const std::vector<SampleDistribution>& samples, double alpha) {
    if (samples.size() != 9)
        throw std::invalid_argument("heatmap: exactly nine distributions required");
    for (const auto& s : samples)
        if (s.values.empty())
            throw std::invalid_argument("heatmap: distribution " + label_string(s.label) +
                                        " is empty");
    HeatmapMatrix matrix(9, std::vector<PairwiseTestResult>(9));
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            const auto test = mann_whitney_u(samples[i].values, samples[j].values);
            matrix[i][j] = PairwiseTestResult{samples[i].label, samples[j].label, test.u,
                                              test.p, test.p < alpha};
        }
    }
    return matrix;
}

std::uint64_t evals_to_best(const RunRecord& record) {
    if (record.timeline.empty())
        throw std::invalid_argument("evals_to_best: record has an empty timeline");
    return record.timeline.back().evals;
}

double median_pairwise_distance(const std::vector<TruthTable>& population) {
    if (population.size() < 2)
        throw std::invalid_argument("median pairwise distance: need at least two individuals");
    std::vector<std::size_t> distances;
    distances.reserve(population.size() * (population.size() - 1) / 2);
    for (std::size_t i = 0; i < population.size(); ++i)
        for (std::size_t j = i + 1; j < population.size(); ++j)
            distances.push_back(hamming_distance(population[i], population[j]));
    std::sort(distances.begin(), distances.end());
    const std::size_t count = distances.size();
    if (count % 2 == 1) return static_cast<double>(distances[count / 2]);
    return 0.5 * static_cast<double>(distances[count / 2 - 1] + distances[count / 2]);
}

namespace {

double quantile_sorted(std::span<const double> sorted, double q) {
    const double h = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

BoxplotSummary boxplot_summary(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("boxplot: empty distribution");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return BoxplotSummary{sorted.front(), quantile_sorted(sorted, 0.25),
                          quantile_sorted(sorted, 0.5), quantile_sorted(sorted, 0.75),
                          sorted.back()};
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

MetricsRow metrics_row(const RunRecord& record) {
    MetricsRow row;
    row.n = record.config.n;
    row.crossover = record.config.crossover;
    row.policy = record.config.policy;
    row.seed = record.config.seed;
    row.best_fitness = record.best_fitness;
    row.evals_to_best = evals_to_best(record);
    row.median_pairwise_distance = median_pairwise_distance(record.final_population);
    return row;
}

std::string metrics_to_csv(const std::vector<MetricsRow>& rows) {
    std::string out = "n,crossover,policy,seed,best_fitness,evals_to_best,median_pairwise_distance\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += crossover_key(r.crossover);
        out += ',';
        out += policy_key(r.policy);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.best_fitness);
        out += ',';
        out += std::to_string(r.evals_to_best);
        out += ',';
        out += format_number(r.median_pairwise_distance);
        out += '\n';
    }
    return out;
}

std::vector<MetricsRow> metrics_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "n,crossover,policy,seed,best_fitness,evals_to_best,median_pairwise_distance")
        throw std::invalid_argument("metrics csv: missing or unexpected header");
    std::vector<MetricsRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t pos = 0; pos <= line.size(); ++pos) {
            if (pos == line.size() || line[pos] == ',') {
                fields.push_back(line.substr(start, pos - start));
                start = pos + 1;
            }
        }
        if (fields.size() != 7)
            throw std::invalid_argument("metrics csv: malformed row: " + line);
        MetricsRow row;
        row.n = std::stoi(fields[0]);
        const auto cx = parse_crossover(fields[1]);
        const auto ls = parse_policy(fields[2]);
        if (!cx || !ls)
            throw std::invalid_argument("metrics csv: unknown operator key in row: " + line);
        row.crossover = *cx;
        row.policy = *ls;
        row.seed = std::stoull(fields[3]);
        row.best_fitness = std::stoi(fields[4]);
        row.evals_to_best = std::stoull(fields[5]);
        const auto& f = fields[6];
        const auto res = std::from_chars(f.data(), f.data() + f.size(), row.median_pairwise_distance);
        if (res.ec != std::errc() || res.ptr != f.data() + f.size())
            throw std::invalid_argument("metrics csv: bad number in row: " + line);
        rows.push_back(row);
    }
    return rows;
}

std::string heatmap_to_csv(const HeatmapMatrix& matrix) {
    std::string out = "label";
    for (const auto& cell : matrix.front()) {
        out += ',';
        out += label_string(cell.second);
    }
    out += '\n';
    for (const auto& row : matrix) {
        out += label_string(row.front().first);
        for (const auto& cell : row) {
            out += ',';
            out += format_number(cell.p);
        }
        out += '\n';
    }
    return out;
}

std::string boxplots_to_csv(const std::vector<SampleDistribution>& samples) {
    std::string out = "n,crossover,policy,min,q1,median,q3,max\n";
    for (const auto& s : samples) {
        const auto b = boxplot_summary(s.values);
        out += std::to_string(s.label.n);
        out += ',';
        out += crossover_key(s.label.crossover);
        out += ',';
        out += policy_key(s.label.policy);
        for (double v : {b.min, b.q1, b.median, b.q3, b.max}) {
            out += ',';
            out += format_number(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace bga
