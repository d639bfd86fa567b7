#include "bga/local_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bga {

std::string_view policy_key(LocalSearchPolicy policy) {
    switch (policy) {
        case LocalSearchPolicy::None: return "ls0";
        case LocalSearchPolicy::SingleStep: return "ls1";
        case LocalSearchPolicy::SteepestAscent: return "ls2";
    }
    return "ls?";
}

std::optional<LocalSearchPolicy> parse_policy(std::string_view key) {
    if (key == "ls0") return LocalSearchPolicy::None;
    if (key == "ls1") return LocalSearchPolicy::SingleStep;
    if (key == "ls2") return LocalSearchPolicy::SteepestAscent;
    return std::nullopt;
}

namespace {

// A swap raises the nonlinearity by 2 exactly when every coefficient lands at
// |W + delta| <= max|W| - 4 (a max-attaining coefficient can drop by at most
// 4, so the new max cannot be lower than that). Coefficients with
// |W| <= max-8 can never break the bound under a +-4 delta, so the probe only
// has to look at the "hot" ones above it. Sorted by |W| descending, failing
// candidates are rejected at the first or second check almost always.
std::vector<std::uint32_t> hot_coefficients(const std::vector<std::int32_t>& w, int maxabs) {
    std::vector<std::uint32_t> hot;
    for (std::size_t a = 0; a < w.size(); ++a) {
        const std::int32_t mag = w[a] < 0 ? -w[a] : w[a];
        if (mag > maxabs - 8) hot.push_back(static_cast<std::uint32_t>(a));
    }
    std::stable_sort(hot.begin(), hot.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::abs(w[a]) > std::abs(w[b]);
    });
    return hot;
}

// First 2-improvement swap in (y, z), y < z order. probe_charger, when set,
// charges one evaluation per examined candidate.
std::optional<SwapCandidate> first_improving(const Individual& ind, EvalCounter* probe_charger) {
    const auto& w = ind.spectrum.coeffs;
    const auto& bits = ind.table.bits;
    const std::size_t size = bits.size();
    const int maxabs = max_abs_coeff(ind.spectrum);
    const std::int32_t target = maxabs - 4;

    const auto hot = hot_coefficients(w, maxabs);
    std::vector<std::uint8_t> parity_y(hot.size());

    for (std::size_t y = 0; y + 1 < size; ++y) {
        const std::int32_t sign_y = bits[y] ? -1 : 1;
        for (std::size_t k = 0; k < hot.size(); ++k)
            parity_y[k] = static_cast<std::uint8_t>(std::popcount(hot[k] & y) & 1u);
        for (std::size_t z = y + 1; z < size; ++z) {
            if (bits[y] == bits[z]) continue;
            if (probe_charger) probe_charger->charge();
            bool ok = true;
            for (std::size_t k = 0; k < hot.size(); ++k) {
                const std::uint32_t a = hot[k];
                const std::uint8_t pz = static_cast<std::uint8_t>(std::popcount(a & z) & 1u);
                std::int32_t v = w[a];
                if (pz != parity_y[k]) v += 4 * sign_y * (pz ? -1 : 1);
                if (v < -target || v > target) {
                    ok = false;
                    break;
                }
            }
            if (ok) return SwapCandidate{y, z, 2};
        }
    }
    return std::nullopt;
}

void verify_consistency(const Individual& ind) {
    if (!is_balanced(ind.table.bits))
        throw std::logic_error("local search: individual lost balancedness");
    const auto fresh = walsh_fast(ind.table);
    if (fresh.coeffs != ind.spectrum.coeffs)
        throw std::logic_error("local search: incremental spectrum diverged from recomputation");
    if (nonlinearity(fresh) != ind.fitness)
        throw std::logic_error("local search: fitness diverged from recomputation");
}

}  // namespace

std::optional<SwapCandidate> two_improvement_first(const Individual& ind) {
    return first_improving(ind, nullptr);
}

bool is_local_optimum(const Individual& ind) {
    return !two_improvement_first(ind).has_value();
}

Individual apply_policy(Individual ind, LocalSearchPolicy policy, EvalCounter& counter,
                        EvalCounting counting, const SwapObserver& on_applied,
                        bool verify_spectra) {
    if (policy == LocalSearchPolicy::None) return ind;
    EvalCounter* probe_charger = counting == EvalCounting::AllProbes ? &counter : nullptr;
    while (!counter.exhausted()) {
        const auto cand = first_improving(ind, probe_charger);
        if (!cand) break;
        // probing may have eaten the rest of the budget before the swap could
        // be evaluated as applied
        if (probe_charger && counter.exhausted()) break;
        ind = apply_swap(ind, cand->y, cand->z);
        if (counting == EvalCounting::AppliedOnly) counter.charge();
        if (verify_spectra) verify_consistency(ind);
        if (on_applied) on_applied(ind);
        if (policy == LocalSearchPolicy::SingleStep) break;
    }
    return ind;
}

}  // namespace bga
