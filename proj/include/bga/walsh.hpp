#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "bga/truth_table.hpp"

namespace bga {

// Walsh coefficients W_f(a) for all a, indexed like the truth table.
// Coefficients fit comfortably in 32 bits for n <= 16.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> coeffs;  // 2^n entries

    std::size_t size() const { return coeffs.size(); }
};

// Scalar product a.x of two inputs read as n-bit vectors: the XOR of all
// bitwise ANDs, i.e. the parity of a & x on the index words.
inline int scalar_product(std::size_t a, std::size_t x) {
    return static_cast<int>(std::popcount(a & x) & 1u);
}

// Direct double summation of W_f(a) = sum_x (-1)^(f(x) xor a.x); O(4^n).
// Slow by design: this is the oracle the fast transform is checked against.
WalshSpectrum walsh_naive(const TruthTable& t);

// In-place butterfly transform of the sign vector (-1)^f(x); O(n 2^n).
WalshSpectrum walsh_fast(const TruthTable& t);

int max_abs_coeff(const WalshSpectrum& s);

// nl(f) = 2^(n-1) - max_a |W_f(a)| / 2; always a nonnegative integer.
int nonlinearity(const WalshSpectrum& s);

// Coefficient-wise spectrum change induced by swapping the table entries at
// y and z. Requires f(y) != f(z); every entry is -4, 0 or +4. Computed as
// 2 * (-1)^f(y) * ((-1)^(a.z) - (-1)^(a.y)), which for differing values
// equals the two-bracket textbook form (the unit tests compare both).
std::vector<std::int32_t> swap_delta(const TruthTable& t, std::size_t y, std::size_t z);

}  // namespace bga
