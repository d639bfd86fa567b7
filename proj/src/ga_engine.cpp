#include "bga/ga_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bga {

std::string_view eval_counting_key(EvalCounting counting) {
    switch (counting) {
        case EvalCounting::AppliedOnly: return "applied-only";
        case EvalCounting::OffspringOnly: return "offspring-only";
        case EvalCounting::AllProbes: return "all-probes";
    }
    return "?";
}

std::optional<EvalCounting> parse_eval_counting(std::string_view key) {
    if (key == "applied-only") return EvalCounting::AppliedOnly;
    if (key == "offspring-only") return EvalCounting::OffspringOnly;
    if (key == "all-probes") return EvalCounting::AllProbes;
    return std::nullopt;
}

void GAConfig::validate() const {
    if (n < 1 || n > 16)
        throw std::invalid_argument("config: n must be in [1, 16]");
    if (tournament_size < 2)
        throw std::invalid_argument("config: tournament size must be at least 2");
    if (population_size < tournament_size)
        throw std::invalid_argument("config: population must be at least the tournament size");
    if (eval_budget == 0)
        throw std::invalid_argument("config: evaluation budget must be positive");
    if (eval_budget < population_size)
        throw std::invalid_argument("config: budget must cover the initial evaluations");
    if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0))
        throw std::invalid_argument("config: mutation probability must be in [0, 1]");
}

void BestTracker::observe(const Individual& ind, std::uint64_t consumed) {
    if (ind.fitness <= best_fitness) return;
    best_fitness = ind.fitness;
    best_table = ind.table;
    evals_to_best = consumed;
    if (!timeline.empty() && timeline.back().evals == consumed)
        timeline.back().fitness = best_fitness;
    else
        timeline.push_back({consumed, best_fitness});
}

namespace {

void check_balanced(const Individual& ind, const char* where) {
    if (!is_balanced(ind.table.bits))
        throw std::logic_error(std::string("ga engine: unbalanced individual from ") + where);
}

}  // namespace

std::vector<Individual> init_population(const GAConfig& config, RandomSource& rng,
                                        EvalCounter& counter, BestTracker& best) {
    std::vector<Individual> population;
    population.reserve(config.population_size);
    const std::size_t length = std::size_t{1} << config.n;
    for (std::size_t i = 0; i < config.population_size; ++i) {
        auto ind = evaluate(TruthTable{config.n, random_balanced_bits(length, rng)});
        counter.charge();
        best.observe(ind, counter.consumed);
        if (config.check_invariants) check_balanced(ind, "initialization");
        population.push_back(std::move(ind));
    }
    return population;
}

void tournament_step(std::vector<Individual>& population, const GAConfig& config,
                     RandomSource& rng, EvalCounter& counter, BestTracker& best) {
    // tournament draw without replacement; collisions are redrawn
    std::vector<std::size_t> picked;
    picked.reserve(config.tournament_size);
    while (picked.size() < config.tournament_size) {
        const std::size_t j = rng.below(population.size());
        if (std::find(picked.begin(), picked.end(), j) == picked.end())
            picked.push_back(j);
    }
    // rank by fitness, ties to the lower population index
    std::sort(picked.begin(), picked.end(), [&](std::size_t a, std::size_t b) {
        if (population[a].fitness != population[b].fitness)
            return population[a].fitness > population[b].fitness;
        return a < b;
    });

    Bits child_bits = apply_crossover(config.crossover, population[picked[0]].table.bits,
                                      population[picked[1]].table.bits, rng);
    if (rng.real01() < config.mutation_probability)
        child_bits = swap_mutation(child_bits, rng);

    Individual child = evaluate(TruthTable{config.n, std::move(child_bits)});
    counter.charge();
    best.observe(child, counter.consumed);

    child = apply_policy(std::move(child), config.policy, counter, config.eval_counting,
                         [&](const Individual& improved) { best.observe(improved, counter.consumed); },
                         config.check_invariants);

    if (config.check_invariants) check_balanced(child, "variation or local search");
    population[picked.back()] = std::move(child);
}

RunRecord run_ga(const GAConfig& config) {
    config.validate();
    Mt19937Source rng(config.seed);
    EvalCounter counter{0, config.eval_budget};
    BestTracker best;

    auto population = init_population(config, rng, counter, best);
    while (!counter.exhausted())
        tournament_step(population, config, rng, counter, best);

    RunRecord record;
    record.config = config;
    record.rng_name = std::string(rng.name());
    record.best_fitness = best.best_fitness;
    record.evals_to_best = best.evals_to_best;
    record.best_table = std::move(best.best_table);
    record.timeline = std::move(best.timeline);
    record.final_population.reserve(population.size());
    for (auto& ind : population) record.final_population.push_back(std::move(ind.table));
    return record;
}

}  // namespace bga
