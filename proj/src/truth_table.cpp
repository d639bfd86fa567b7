#include "bga/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bga {

TruthTable make_table(int n, Bits bits) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("truth table: n must be in [1, 16]");
    const std::size_t expected = std::size_t{1} << n;
    if (bits.size() != expected)
        throw std::invalid_argument("truth table: expected " + std::to_string(expected) +
                                    " entries, got " + std::to_string(bits.size()));
    for (auto b : bits)
        if (b > 1) throw std::invalid_argument("truth table: entries must be 0 or 1");
    return TruthTable{n, std::move(bits)};
}

TruthTable zero_table(int n) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("truth table: n must be in [1, 16]");
    return TruthTable{n, Bits(std::size_t{1} << n, 0)};
}

std::size_t hamming_weight(std::span<const std::uint8_t> bits) {
    std::size_t w = 0;
    for (auto b : bits) w += b;
    return w;
}

bool is_balanced(std::span<const std::uint8_t> bits) {
    return bits.size() % 2 == 0 && hamming_weight(bits) == bits.size() / 2;
}

std::size_t hamming_distance(std::span<const std::uint8_t> a,
                             std::span<const std::uint8_t> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::size_t hamming_distance(const TruthTable& a, const TruthTable& b) {
    if (a.n != b.n)
        throw std::invalid_argument("hamming distance: tables have different n");
    return hamming_distance(std::span(a.bits), std::span(b.bits));
}

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(const TruthTable& t) {
    const std::size_t size = t.size();
    std::string out;
    out.reserve((size + 3) / 4);
    for (std::size_t i = 0; i < size; i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < size) nibble |= t.bits[i + j];
        }
        out.push_back(kHexDigits[nibble]);
    }
    return out;
}

TruthTable table_from_hex(int n, std::string_view hex) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("truth table: n must be in [1, 16]");
    const std::size_t size = std::size_t{1} << n;
    const std::size_t digits = (size + 3) / 4;
    if (hex.size() != digits)
        throw std::invalid_argument("hex table: expected " + std::to_string(digits) +
                                    " digits for n=" + std::to_string(n));
    Bits bits(size, 0);
    for (std::size_t d = 0; d < digits; ++d) {
        const int v = hex_value(hex[d]);
        if (v < 0) throw std::invalid_argument("hex table: invalid digit");
        for (std::size_t j = 0; j < 4; ++j) {
            const std::size_t pos = d * 4 + j;
            const std::uint8_t bit = (v >> (3 - j)) & 1;
            if (pos < size)
                bits[pos] = bit;
            else if (bit)
                throw std::invalid_argument("hex table: nonzero padding bits");
        }
    }
    return TruthTable{n, std::move(bits)};
}

std::string to_binary_string(const TruthTable& t) {
    std::string out(t.size(), '0');
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t.bits[i]) out[i] = '1';
    return out;
}

TruthTable table_from_binary(std::string_view s) {
    if (s.empty() || !std::has_single_bit(s.size()))
        throw std::invalid_argument("binary table: length must be a power of two");
    const int n = std::countr_zero(s.size());
    Bits bits(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            bits[i] = 1;
        else if (s[i] != '0')
            throw std::invalid_argument("binary table: characters must be 0 or 1");
    }
    return make_table(n, std::move(bits));
}

}  // namespace bga
