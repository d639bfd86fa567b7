#pragma once

#include "bga/truth_table.hpp"
#include "bga/walsh.hpp"

namespace bga {

// Candidate solution: a truth table with its spectrum kept consistent and the
// nonlinearity fitness derived from it.
struct Individual {
    TruthTable table;
    WalshSpectrum spectrum;
    int fitness = 0;
};

// Builds an Individual from a table via the fast transform.
Individual evaluate(TruthTable t);

// Swaps the differing entries y and z, updating the spectrum coefficient-wise
// from the swap delta and the fitness from the updated spectrum; O(2^n).
// Throws if the entries are equal (the swap would be a no-op).
Individual apply_swap(const Individual& ind, std::size_t y, std::size_t z);

}  // namespace bga
