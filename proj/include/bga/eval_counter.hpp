#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace bga {

// What a charged fitness evaluation is. Offspring transforms always charge 1.
//   AppliedOnly   - each applied local-search swap charges 1; probes are free.
//   OffspringOnly - local search charges nothing.
//   AllProbes     - every probed candidate swap charges 1; applying the found
//                   swap charges nothing further (its probe already did).
enum class EvalCounting { AppliedOnly, OffspringOnly, AllProbes };

std::string_view eval_counting_key(EvalCounting counting);
std::optional<EvalCounting> parse_eval_counting(std::string_view key);

// Charged evaluations of one run; monotonically nondecreasing, and the run
// stops once consumed reaches the budget.
struct EvalCounter {
    std::uint64_t consumed = 0;
    std::uint64_t budget = UINT64_MAX;

    bool exhausted() const { return consumed >= budget; }
    void charge(std::uint64_t k = 1) { consumed += k; }
};

}  // namespace bga
