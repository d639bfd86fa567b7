#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "bga/random_source.hpp"
#include "bga/truth_table.hpp"

namespace bga {

enum class CrossoverKind { CounterBased, ZeroLength, MapOfOnes };

std::string_view crossover_key(CrossoverKind kind);  // "cx1", "cx2", "cx3"
std::optional<CrossoverKind> parse_crossover(std::string_view key);

// All three crossovers take balanced parents of the same even length 2m and
// return a balanced child. Parent choices are fair coins; a 0 bit copies the
// first parent. Unbalanced or length-mismatched parents are rejected.

// Scans positions left to right copying the chosen parent's bit and counting
// zeros/ones; once a counter reaches m the remaining positions are filled
// with the complementary value.
Bits counter_based_crossover(std::span<const std::uint8_t> p1,
                             std::span<const std::uint8_t> p2, RandomSource& rng);

// Works on the parents' zero-length encodings, accumulating the copied run
// lengths. A copy that would push the sum past m is clamped to m minus the
// accumulator; on reaching m the remaining coordinates become zeros, and the
// final coordinate is never drawn, only forced to balance the sum.
Bits zero_length_crossover(std::span<const std::uint8_t> p1,
                           std::span<const std::uint8_t> p2, RandomSource& rng);

// Works on the parents' maps of ones. A chosen position already in the child
// is replaced by the other parent's; if both are taken, a uniform draw over
// the still-unused positions repairs the coordinate.
Bits map_of_ones_crossover(std::span<const std::uint8_t> p1,
                           std::span<const std::uint8_t> p2, RandomSource& rng);

Bits apply_crossover(CrossoverKind kind, std::span<const std::uint8_t> p1,
                     std::span<const std::uint8_t> p2, RandomSource& rng);

// Exchanges one uniformly chosen 1-position with one uniformly chosen
// 0-position (1-position drawn first); the result is balanced at Hamming
// distance exactly 2 from the input.
Bits swap_mutation(std::span<const std::uint8_t> bits, RandomSource& rng);

// Uniform draw from the set of balanced strings of the given even length:
// a Fisher-Yates shuffle of a fixed half-and-half multiset.
Bits random_balanced_bits(std::size_t length, RandomSource& rng);

}  // namespace bga
