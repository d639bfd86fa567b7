#include "bga/walsh.hpp"

#include <cmath>
#include <stdexcept>

namespace bga {

WalshSpectrum walsh_naive(const TruthTable& t) {
    const std::size_t size = t.size();
    WalshSpectrum s{t.n, std::vector<std::int32_t>(size, 0)};
    // parity[w] = parity of the word w, filled by the shift recurrence
    std::vector<std::uint8_t> parity(size, 0);
    for (std::size_t w = 1; w < size; ++w) parity[w] = parity[w >> 1] ^ (w & 1u);
    std::vector<std::int32_t> sign(size);
    for (std::size_t x = 0; x < size; ++x) sign[x] = t.bits[x] ? -1 : 1;
    for (std::size_t a = 0; a < size; ++a) {
        std::int32_t sum = 0;
        for (std::size_t x = 0; x < size; ++x)
            sum += parity[a & x] ? -sign[x] : sign[x];
        s.coeffs[a] = sum;
    }
    return s;
}

WalshSpectrum walsh_fast(const TruthTable& t) {
    const std::size_t size = t.size();
    WalshSpectrum s{t.n, std::vector<std::int32_t>(size)};
    auto& v = s.coeffs;
    for (std::size_t i = 0; i < size; ++i) v[i] = t.bits[i] ? -1 : 1;
    for (std::size_t len = 1; len < size; len <<= 1) {
        for (std::size_t block = 0; block < size; block += len << 1) {
            for (std::size_t i = block; i < block + len; ++i) {
                const std::int32_t a = v[i];
                const std::int32_t b = v[i + len];
                v[i] = a + b;
                v[i + len] = a - b;
            }
        }
    }
    return s;
}

int max_abs_coeff(const WalshSpectrum& s) {
    std::int32_t best = 0;
    for (auto c : s.coeffs) {
        const std::int32_t a = c < 0 ? -c : c;
        if (a > best) best = a;
    }
    return best;
}

int nonlinearity(const WalshSpectrum& s) {
    return (1 << (s.n - 1)) - max_abs_coeff(s) / 2;
}

std::vector<std::int32_t> swap_delta(const TruthTable& t, std::size_t y, std::size_t z) {
    const std::size_t size = t.size();
    if (y >= size || z >= size)
        throw std::invalid_argument("swap delta: index out of range");
    if (t.bits[y] == t.bits[z])
        throw std::invalid_argument("swap delta: entries are equal, swap is a no-op");
    const std::int32_t sign_y = t.bits[y] ? -1 : 1;
    std::vector<std::int32_t> delta(size, 0);
    const std::size_t diff = y ^ z;
    for (std::size_t a = 0; a < size; ++a) {
        // (-1)^(a.y) != (-1)^(a.z) exactly when a & (y ^ z) has odd parity.
        if (scalar_product(a, diff)) {
            const std::int32_t ez = scalar_product(a, z) ? -1 : 1;
            delta[a] = 4 * sign_y * ez;
        }
    }
    return delta;
}

}  // namespace bga
