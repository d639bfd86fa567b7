#pragma once

#include <cstdint>
#include <vector>

#include "bga/eval_counter.hpp"
#include "bga/individual.hpp"
#include "bga/local_search.hpp"
#include "bga/random_source.hpp"
#include "bga/variation.hpp"

namespace bga {

struct GAConfig {
    int n = 6;
    std::size_t population_size = 50;
    std::uint64_t eval_budget = 500000;
    std::size_t tournament_size = 3;
    double mutation_probability = 0.7;
    CrossoverKind crossover = CrossoverKind::CounterBased;
    LocalSearchPolicy policy = LocalSearchPolicy::None;
    EvalCounting eval_counting = EvalCounting::AppliedOnly;
    std::uint64_t seed = 0;
    // Validates every inserted individual (balancedness, spectrum recompute)
    // during the run; results are unaffected.
    bool check_invariants = false;

    void validate() const;  // throws std::invalid_argument
};

struct TimelinePoint {
    std::uint64_t evals = 0;
    int fitness = 0;
};

// Best-so-far bookkeeping over every evaluated individual. The timeline keeps
// one change-point per consumed-evaluations value, so it is strictly
// increasing in both coordinates.
struct BestTracker {
    int best_fitness = -1;
    TruthTable best_table;
    std::uint64_t evals_to_best = 0;
    std::vector<TimelinePoint> timeline;

    void observe(const Individual& ind, std::uint64_t consumed);
};

// Reproducible trace of one finished run.
struct RunRecord {
    GAConfig config;
    std::string rng_name;
    int best_fitness = 0;
    std::uint64_t evals_to_best = 0;
    TruthTable best_table;
    std::vector<TimelinePoint> timeline;
    std::vector<TruthTable> final_population;
};

// population_size balanced tables drawn uniformly, each evaluated through the
// fast transform (one charge apiece). No local search on initial individuals.
std::vector<Individual> init_population(const GAConfig& config, RandomSource& rng,
                                        EvalCounter& counter, BestTracker& best);

// One steady-state step: draw tournament_size distinct individuals, rank them
// by fitness (ties to the lower population index), cross the best two, mutate
// the child with the configured probability, evaluate (charge 1), run local
// search, then replace the tournament's worst unconditionally. Stream
// consumption order per step: tournament index draws (collisions redrawn),
// the crossover's own draws, one real for the mutation gate, then the
// mutation's two position draws when it fires. Local search draws nothing.
void tournament_step(std::vector<Individual>& population, const GAConfig& config,
                     RandomSource& rng, EvalCounter& counter, BestTracker& best);

// init_population then tournament steps until the budget is consumed.
// Deterministic in (config, seed).
RunRecord run_ga(const GAConfig& config);

}  // namespace bga
