#include "bga/encodings.hpp"

#include <numeric>
#include <stdexcept>

namespace bga {

ZeroLengthEncoding to_zero_length(std::span<const std::uint8_t> bits) {
    if (!is_balanced(bits))
        throw std::invalid_argument("zero-length encoding: input must be balanced");
    const std::size_t m = bits.size() / 2;
    ZeroLengthEncoding z{m, std::vector<std::size_t>(m + 1, 0)};
    std::size_t run = 0;
    std::size_t ones = 0;
    for (auto b : bits) {
        if (b) {
            z.runs[ones++] = run;
            run = 0;
        } else {
            ++run;
        }
    }
    z.runs[m] = run;  // trailing zeros
    return z;
}

Bits from_zero_length(const ZeroLengthEncoding& z) {
    if (z.runs.size() != z.m + 1)
        throw std::invalid_argument("zero-length decode: expected m+1 run entries");
    const std::size_t total = std::accumulate(z.runs.begin(), z.runs.end(), std::size_t{0});
    if (total != z.m)
        throw std::invalid_argument("zero-length decode: runs must sum to m");
    Bits out;
    out.reserve(2 * z.m);
    for (std::size_t i = 0; i < z.m; ++i) {
        out.insert(out.end(), z.runs[i], 0);
        out.push_back(1);
    }
    out.insert(out.end(), z.runs[z.m], 0);
    return out;
}

MapOfOnes to_map_of_ones(std::span<const std::uint8_t> bits) {
    if (!is_balanced(bits))
        throw std::invalid_argument("map of ones: input must be balanced");
    MapOfOnes mo{bits.size() / 2, {}};
    mo.positions.reserve(mo.m);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) mo.positions.push_back(i);
    return mo;
}

Bits from_map_of_ones(const MapOfOnes& mo) {
    if (mo.positions.size() != mo.m)
        throw std::invalid_argument("map of ones decode: expected m positions");
    Bits out(2 * mo.m, 0);
    for (auto p : mo.positions) {
        if (p >= out.size())
            throw std::invalid_argument("map of ones decode: position out of range");
        if (out[p])
            throw std::invalid_argument("map of ones decode: duplicate position");
        out[p] = 1;
    }
    return out;
}

}  // namespace bga
