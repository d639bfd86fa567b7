#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "bga/individual.hpp"
#include "bga/random_source.hpp"
#include "bga/truth_table.hpp"
#include "bga/walsh.hpp"

namespace bga::test {

// Replays scripted draws; throws when a queue runs dry so tests notice any
// drift in the operators' consumption order.
class ScriptedSource final : public RandomSource {
  public:
    std::deque<bool> bits;
    std::deque<std::uint64_t> ints;
    std::deque<double> reals;

    bool bit() override { return pop(bits, "bit"); }
    std::uint64_t below(std::uint64_t bound) override {
        const auto v = pop(ints, "below");
        if (v >= bound) throw std::logic_error("scripted draw out of range");
        return v;
    }
    double real01() override { return pop(reals, "real01"); }
    std::string_view name() const override { return "scripted"; }

  private:
    template <typename Q>
    static typename Q::value_type pop(Q& queue, const char* what) {
        if (queue.empty()) throw std::logic_error(std::string("scripted source is out of ") + what);
        auto v = queue.front();
        queue.pop_front();
        return v;
    }
};

inline TruthTable random_balanced_table(int n, RandomSource& rng) {
    const std::size_t size = std::size_t{1} << n;
    Bits bits(size, 0);
    for (std::size_t i = size / 2; i < size; ++i) bits[i] = 1;
    for (std::size_t i = size - 1; i > 0; --i) std::swap(bits[i], bits[rng.below(i + 1)]);
    return TruthTable{n, std::move(bits)};
}

// Exhaustive 2-improvement oracle: tries every swap of differing values and
// recomputes the swapped table's nonlinearity from scratch.
inline std::vector<std::pair<std::size_t, std::size_t>> improving_swaps_brute(
    const TruthTable& table) {
    const int base = nonlinearity(walsh_fast(table));
    std::vector<std::pair<std::size_t, std::size_t>> found;
    TruthTable probe = table;
    for (std::size_t y = 0; y + 1 < table.size(); ++y) {
        for (std::size_t z = y + 1; z < table.size(); ++z) {
            if (table.bits[y] == table.bits[z]) continue;
            std::swap(probe.bits[y], probe.bits[z]);
            if (nonlinearity(walsh_fast(probe)) == base + 2) found.emplace_back(y, z);
            std::swap(probe.bits[y], probe.bits[z]);
        }
    }
    return found;
}

// Exact two-sided Mann-Whitney oracle by direct enumeration: U is counted
// pairwise (wins plus half-ties) for every way of assigning the pooled values
// to the first sample. Independent of the library's midrank machinery.
inline double mww_exact_two_sided_brute(const std::vector<double>& xs,
                                        const std::vector<double>& ys) {
    std::vector<double> pool = xs;
    pool.insert(pool.end(), ys.begin(), ys.end());
    const std::size_t n1 = xs.size();
    const std::size_t total = pool.size();

    auto u_of = [&](const std::vector<std::size_t>& first_idx) {
        std::vector<bool> in_first(total, false);
        for (auto i : first_idx) in_first[i] = true;
        double u = 0;
        for (std::size_t i = 0; i < total; ++i) {
            if (!in_first[i]) continue;
            for (std::size_t j = 0; j < total; ++j) {
                if (in_first[j]) continue;
                if (pool[i] > pool[j]) u += 1;
                else if (pool[i] == pool[j]) u += 0.5;
            }
        }
        return u;
    };

    std::vector<std::size_t> observed(n1);
    for (std::size_t i = 0; i < n1; ++i) observed[i] = i;
    const double u_obs = u_of(observed);
    const double mu = 0.5 * static_cast<double>(n1) * static_cast<double>(total - n1);

    std::size_t extreme = 0, count = 0;
    std::vector<std::size_t> pick;
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        if (pick.size() == n1) {
            ++count;
            if (std::abs(u_of(pick) - mu) >= std::abs(u_obs - mu) - 1e-9) ++extreme;
            return;
        }
        for (std::size_t i = next; i < total; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    return static_cast<double>(extreme) / static_cast<double>(count);
}

}  // namespace bga::test
