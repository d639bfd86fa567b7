#include "bga/individual.hpp"

#include <stdexcept>

namespace bga {

Individual evaluate(TruthTable t) {
    Individual ind;
    ind.spectrum = walsh_fast(t);
    ind.fitness = nonlinearity(ind.spectrum);
    ind.table = std::move(t);
    return ind;
}

Individual apply_swap(const Individual& ind, std::size_t y, std::size_t z) {
    const std::size_t size = ind.table.size();
    if (y >= size || z >= size)
        throw std::invalid_argument("apply swap: index out of range");
    if (ind.table.bits[y] == ind.table.bits[z])
        throw std::invalid_argument("apply swap: entries are equal, swap is a no-op");

    Individual out = ind;
    const std::int32_t sign_y = ind.table.bits[y] ? -1 : 1;
    const std::size_t diff = y ^ z;
    for (std::size_t a = 0; a < size; ++a) {
        if (scalar_product(a, diff)) {
            const std::int32_t ez = scalar_product(a, z) ? -1 : 1;
            out.spectrum.coeffs[a] += 4 * sign_y * ez;
        }
    }
    std::swap(out.table.bits[y], out.table.bits[z]);
    out.fitness = nonlinearity(out.spectrum);
    return out;
}

}  // namespace bga
