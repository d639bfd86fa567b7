#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bga/truth_table.hpp"

namespace bga {

// Run-length view of a balanced bitstring of length 2m: runs[i] counts the
// consecutive zeros before the i-th one, runs[m] the trailing zeros. Valid
// encodings have m+1 nonnegative entries summing to m.
struct ZeroLengthEncoding {
    std::size_t m = 0;
    std::vector<std::size_t> runs;
};

// Positions of the ones of a balanced bitstring of length 2m; canonical form
// is ascending. Entries must be distinct and in [0, 2m).
struct MapOfOnes {
    std::size_t m = 0;
    std::vector<std::size_t> positions;
};

ZeroLengthEncoding to_zero_length(std::span<const std::uint8_t> bits);  // rejects unbalanced input
Bits from_zero_length(const ZeroLengthEncoding& z);                     // rejects if runs do not sum to m

MapOfOnes to_map_of_ones(std::span<const std::uint8_t> bits);  // rejects unbalanced input
Bits from_map_of_ones(const MapOfOnes& mo);  // order-insensitive; rejects duplicates and out-of-range

}  // namespace bga
