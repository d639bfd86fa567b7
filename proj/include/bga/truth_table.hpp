#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bga {

// Plain bitstring; every entry is 0 or 1.
using Bits = std::vector<std::uint8_t>;

// Truth table of an n-variable Boolean function. Entry i holds f(x) where the
// index i, read as an n-bit word with the first variable in the most
// significant position, is the input vector; entries are therefore in
// lexicographic input order.
struct TruthTable {
    int n = 0;
    Bits bits;  // exactly 2^n entries

    std::size_t size() const { return bits.size(); }
};

// Validates 1 <= n <= 16, the entry count and that entries are 0/1.
TruthTable make_table(int n, Bits bits);
TruthTable zero_table(int n);

std::size_t hamming_weight(std::span<const std::uint8_t> bits);
bool is_balanced(std::span<const std::uint8_t> bits);

// Number of differing positions; inputs must have equal length.
std::size_t hamming_distance(std::span<const std::uint8_t> a,
                             std::span<const std::uint8_t> b);
std::size_t hamming_distance(const TruthTable& a, const TruthTable& b);

// Hex form: each digit packs four consecutive entries, first entry of the
// group in the most significant bit, so the leading digit's MSB is f(0,...,0).
// For n = 1 the two table entries sit in the high bits of a single digit and
// the unused low bits must be zero. Round-trips exactly given n.
std::string to_hex(const TruthTable& t);
TruthTable table_from_hex(int n, std::string_view hex);

// 0/1 character form, entry order as stored; length must be a power of two.
std::string to_binary_string(const TruthTable& t);
TruthTable table_from_binary(std::string_view s);

}  // namespace bga
