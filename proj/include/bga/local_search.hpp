#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "bga/eval_counter.hpp"
#include "bga/individual.hpp"

namespace bga {

enum class LocalSearchPolicy { None, SingleStep, SteepestAscent };

std::string_view policy_key(LocalSearchPolicy policy);  // "ls0", "ls1", "ls2"
std::optional<LocalSearchPolicy> parse_policy(std::string_view key);

// A swap whose application raises the nonlinearity by exactly 2, i.e. a
// member of the individual's 2-improvement set.
struct SwapCandidate {
    std::size_t y = 0;
    std::size_t z = 0;
    int gain = 2;
};

// First member of the 2-improvement set in the fixed enumeration order:
// ordered pairs (y, z), y < z, over table indices, skipping equal values.
// Each candidate is probed through the swap deltas alone, no spectrum copy.
// Empty means the individual is a local optimum.
std::optional<SwapCandidate> two_improvement_first(const Individual& ind);

bool is_local_optimum(const Individual& ind);

using SwapObserver = std::function<void(const Individual&)>;

// LS0 returns the individual unchanged; LS1 applies the first improving swap
// if any; LS2 reapplies (rescanning from the start each time) until the
// 2-improvement set is empty. Swaps charge the counter per the counting
// policy and the search stops early once the budget is exhausted. on_applied
// fires after every applied swap; verify_spectra recomputes the spectrum from
// scratch after each swap and checks it (debug-mode runs).
Individual apply_policy(Individual ind, LocalSearchPolicy policy, EvalCounter& counter,
                        EvalCounting counting = EvalCounting::AppliedOnly,
                        const SwapObserver& on_applied = {}, bool verify_spectra = false);

}  // namespace bga
