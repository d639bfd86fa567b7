#include "bga/variation.hpp"

#include <algorithm>
#include <stdexcept>

#include "bga/encodings.hpp"

namespace bga {

std::string_view crossover_key(CrossoverKind kind) {
    switch (kind) {
        case CrossoverKind::CounterBased: return "cx1";
        case CrossoverKind::ZeroLength: return "cx2";
        case CrossoverKind::MapOfOnes: return "cx3";
    }
    return "cx?";
}

std::optional<CrossoverKind> parse_crossover(std::string_view key) {
    if (key == "cx1") return CrossoverKind::CounterBased;
    if (key == "cx2") return CrossoverKind::ZeroLength;
    if (key == "cx3") return CrossoverKind::MapOfOnes;
    return std::nullopt;
}

namespace {

void check_parents(std::span<const std::uint8_t> p1, std::span<const std::uint8_t> p2) {
    if (p1.size() != p2.size())
        throw std::invalid_argument("crossover: parents have different lengths");
    if (!is_balanced(p1) || !is_balanced(p2))
        throw std::invalid_argument("crossover: parents must be balanced");
}

}  // namespace

Bits counter_based_crossover(std::span<const std::uint8_t> p1,
                             std::span<const std::uint8_t> p2, RandomSource& rng) {
    check_parents(p1, p2);
    const std::size_t m = p1.size() / 2;
    Bits child(p1.size(), 0);
    std::size_t count[2] = {0, 0};
    for (std::size_t i = 0; i < child.size(); ++i) {
        const std::uint8_t v = rng.bit() ? p2[i] : p1[i];
        child[i] = v;
        if (++count[v] == m) {
            // saturated: the rest takes the complementary value
            const std::uint8_t fill = v ^ 1u;
            for (std::size_t j = i + 1; j < child.size(); ++j) child[j] = fill;
            break;
        }
    }
    return child;
}

Bits zero_length_crossover(std::span<const std::uint8_t> p1,
                           std::span<const std::uint8_t> p2, RandomSource& rng) {
    check_parents(p1, p2);
    const auto r1 = to_zero_length(p1);
    const auto r2 = to_zero_length(p2);
    const std::size_t m = r1.m;
    ZeroLengthEncoding child{m, std::vector<std::size_t>(m + 1, 0)};
    std::size_t acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t v = rng.bit() ? r2.runs[i] : r1.runs[i];
        if (acc + v > m) v = m - acc;  // clamp an overshooting copy
        child.runs[i] = v;
        acc += v;
        if (acc == m) break;  // remaining coordinates stay zero
    }
    child.runs[m] += m - acc;  // last coordinate balances the sum
    return from_zero_length(child);
}

Bits map_of_ones_crossover(std::span<const std::uint8_t> p1,
                           std::span<const std::uint8_t> p2, RandomSource& rng) {
    check_parents(p1, p2);
    const auto b1 = to_map_of_ones(p1);
    const auto b2 = to_map_of_ones(p2);
    const std::size_t m = b1.m;
    const std::size_t length = p1.size();
    std::vector<std::uint8_t> taken(length, 0);
    MapOfOnes child{m, {}};
    child.positions.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool second = rng.bit();
        std::size_t v = second ? b2.positions[i] : b1.positions[i];
        if (taken[v]) {
            v = second ? b1.positions[i] : b2.positions[i];
            if (taken[v]) {
                // both parents' values are already in the child: draw a
                // uniform unused position instead
                std::size_t skip = rng.below(length - i);
                for (std::size_t pos = 0;; ++pos) {
                    if (!taken[pos]) {
                        if (skip == 0) {
                            v = pos;
                            break;
                        }
                        --skip;
                    }
                }
            }
        }
        taken[v] = 1;
        child.positions.push_back(v);
    }
    return from_map_of_ones(child);
}

Bits apply_crossover(CrossoverKind kind, std::span<const std::uint8_t> p1,
                     std::span<const std::uint8_t> p2, RandomSource& rng) {
    switch (kind) {
        case CrossoverKind::CounterBased: return counter_based_crossover(p1, p2, rng);
        case CrossoverKind::ZeroLength: return zero_length_crossover(p1, p2, rng);
        case CrossoverKind::MapOfOnes: return map_of_ones_crossover(p1, p2, rng);
    }
    throw std::invalid_argument("crossover: unknown operator");
}

Bits swap_mutation(std::span<const std::uint8_t> bits, RandomSource& rng) {
    if (!is_balanced(bits) || bits.empty())
        throw std::invalid_argument("swap mutation: input must be balanced and nonempty");
    const std::size_t m = bits.size() / 2;
    std::vector<std::size_t> ones, zeros;
    ones.reserve(m);
    zeros.reserve(m);
    for (std::size_t i = 0; i < bits.size(); ++i)
        (bits[i] ? ones : zeros).push_back(i);
    const std::size_t from = ones[rng.below(m)];
    const std::size_t to = zeros[rng.below(m)];
    Bits out(bits.begin(), bits.end());
    out[from] = 0;
    out[to] = 1;
    return out;
}

Bits random_balanced_bits(std::size_t length, RandomSource& rng) {
    if (length == 0 || length % 2 != 0)
        throw std::invalid_argument("random balanced string: length must be even and positive");
    Bits out(length, 0);
    std::fill(out.begin() + length / 2, out.end(), 1);
    for (std::size_t i = length - 1; i > 0; --i)
        std::swap(out[i], out[rng.below(i + 1)]);
    return out;
}

}  // namespace bga
