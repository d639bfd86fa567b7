#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bga/individual.hpp"
#include "bga/truth_table.hpp"
#include "bga/walsh.hpp"
#include "support.hpp"

using namespace bga;

namespace {

TruthTable table_of(int n, std::initializer_list<int> values) {
    Bits bits;
    for (int v : values) bits.push_back(static_cast<std::uint8_t>(v));
    return make_table(n, std::move(bits));
}

std::int64_t parseval_sum(const WalshSpectrum& s) {
    std::int64_t sum = 0;
    for (auto c : s.coeffs) sum += static_cast<std::int64_t>(c) * c;
    return sum;
}

}  // namespace

TEST_CASE("truth table construction validates shape") {
    CHECK_THROWS_AS(make_table(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_table(17, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_table(2, Bits{0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_table(2, Bits{0, 1, 1, 2}), std::invalid_argument);
    CHECK(zero_table(3).size() == 8);
}

TEST_CASE("hamming weight and balance") {
    const auto xor2 = table_of(2, {0, 1, 1, 0});
    CHECK(hamming_weight(xor2.bits) == 2);
    CHECK(is_balanced(xor2.bits));
    CHECK_FALSE(is_balanced(zero_table(2).bits));
}

TEST_CASE("hamming distance") {
    const auto t1 = table_of(3, {0, 1, 0, 1, 0, 1, 1, 0});
    const auto t2 = table_of(3, {1, 0, 0, 0, 1, 0, 1, 1});
    CHECK(hamming_distance(t1, t1) == 0);
    CHECK(hamming_distance(t1, t2) == 6);
    CHECK(hamming_distance(t2, t1) == 6);

    TruthTable complement = t1;
    for (auto& b : complement.bits) b ^= 1;
    CHECK(hamming_distance(t1, complement) == 8);

    CHECK_THROWS_AS(hamming_distance(t1, table_of(2, {0, 1, 1, 0})), std::invalid_argument);
}

TEST_CASE("walsh_naive worked examples") {
    const auto zero = walsh_naive(zero_table(3));
    CHECK(zero.coeffs[0] == 8);
    for (std::size_t a = 1; a < 8; ++a) CHECK(zero.coeffs[a] == 0);

    const auto xor2 = walsh_naive(table_of(2, {0, 1, 1, 0}));
    CHECK(xor2.coeffs == std::vector<std::int32_t>{0, 0, 0, 4});

    const auto and2 = walsh_naive(table_of(2, {0, 0, 0, 1}));
    CHECK(and2.coeffs == std::vector<std::int32_t>{2, 2, 2, -2});
}

TEST_CASE("walsh_fast equals walsh_naive") {
    CHECK(walsh_fast(zero_table(3)).coeffs == walsh_naive(zero_table(3)).coeffs);
    CHECK(walsh_fast(table_of(2, {0, 1, 1, 0})).coeffs == std::vector<std::int32_t>{0, 0, 0, 4});

    Mt19937Source rng(7);
    for (int n = 3; n <= 8; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            Bits bits(std::size_t{1} << n);
            for (auto& b : bits) b = rng.bit();
            const TruthTable t{n, bits};
            CHECK(walsh_fast(t).coeffs == walsh_naive(t).coeffs);
        }
    }
}

TEST_CASE("parseval holds for random tables") {
    Mt19937Source rng(11);
    for (int n = 2; n <= 10; ++n) {
        Bits bits(std::size_t{1} << n);
        for (auto& b : bits) b = rng.bit();
        const auto s = walsh_fast(TruthTable{n, bits});
        CHECK(parseval_sum(s) == std::int64_t{1} << (2 * n));
    }
}

TEST_CASE("spectrum coefficient structure") {
    Mt19937Source rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const auto t = test::random_balanced_table(6, rng);
        const auto s = walsh_fast(t);
        CHECK(s.coeffs[0] == 0);  // balanced
        for (auto c : s.coeffs) CHECK(c % 2 == 0);
    }
    // unbalanced: W(0) = 2^n - 2 w_H(f)
    Bits bits(16, 0);
    bits[3] = bits[7] = bits[9] = 1;
    const auto s = walsh_fast(TruthTable{4, bits});
    CHECK(s.coeffs[0] == 16 - 2 * 3);
}

TEST_CASE("nonlinearity worked examples") {
    CHECK(nonlinearity(walsh_fast(zero_table(3))) == 0);
    CHECK(nonlinearity(walsh_naive(table_of(2, {0, 0, 0, 1}))) == 1);

    // bent function of 4 variables: f(x) = x1 x2 xor x3 x4
    Bits bits(16);
    for (std::size_t i = 0; i < 16; ++i)
        bits[i] = static_cast<std::uint8_t>((((i >> 3) & (i >> 2)) ^ ((i >> 1) & i)) & 1);
    const auto s = walsh_naive(TruthTable{4, bits});
    CHECK(max_abs_coeff(s) == 4);
    CHECK(nonlinearity(s) == 6);
}

TEST_CASE("nonlinearity is invariant under complement") {
    Mt19937Source rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const auto t = test::random_balanced_table(7, rng);
        TruthTable complement = t;
        for (auto& b : complement.bits) b ^= 1;
        const auto s1 = walsh_fast(t);
        const auto s2 = walsh_fast(complement);
        for (std::size_t a = 0; a < s1.size(); ++a) CHECK(s2.coeffs[a] == -s1.coeffs[a]);
        CHECK(nonlinearity(s1) == nonlinearity(s2));
    }
}

TEST_CASE("swap_delta worked examples") {
    const auto xor2 = table_of(2, {0, 1, 1, 0});
    CHECK(swap_delta(xor2, 0, 1) == std::vector<std::int32_t>{0, -4, 0, -4});

    const auto n1 = table_of(1, {0, 1});
    const auto d = swap_delta(n1, 0, 1);
    CHECK(d[0] == 0);
    CHECK(d[1] == -4);

    CHECK_THROWS_AS(swap_delta(xor2, 1, 2), std::invalid_argument);  // equal values
    CHECK_THROWS_AS(swap_delta(xor2, 0, 9), std::invalid_argument);
}

TEST_CASE("swap_delta matches the two-bracket form and recomputation") {
    Mt19937Source rng(19);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto t = test::random_balanced_table(n, rng);
        const std::size_t size = t.size();
        std::size_t y = rng.below(size), z = rng.below(size);
        while (t.bits[y] == t.bits[z]) {
            y = rng.below(size);
            z = rng.below(size);
        }
        const auto delta = swap_delta(t, y, z);

        TruthTable swapped = t;
        std::swap(swapped.bits[y], swapped.bits[z]);
        const auto before = walsh_naive(t);
        const auto after = walsh_naive(swapped);
        for (std::size_t a = 0; a < size; ++a) {
            CHECK(delta[a] == after.coeffs[a] - before.coeffs[a]);
            CHECK((delta[a] == -4 || delta[a] == 0 || delta[a] == 4));
            // literal two-bracket form
            const int sy = t.bits[y] ? -1 : 1;
            const int sz = t.bits[z] ? -1 : 1;
            const int ey = scalar_product(a, y) ? -1 : 1;
            const int ez = scalar_product(a, z) ? -1 : 1;
            CHECK(delta[a] == sy * (ez - ey) + sz * (ey - ez));
        }
        CHECK(delta[0] == 0);
    }
}

TEST_CASE("apply_swap updates spectrum and fitness") {
    const auto xor_ind = evaluate(table_of(2, {0, 1, 1, 0}));
    const auto swapped = apply_swap(xor_ind, 0, 1);
    CHECK(swapped.fitness == 0);
    CHECK(swapped.spectrum.coeffs == std::vector<std::int32_t>{0, -4, 0, 0});
    CHECK(swapped.table.bits == Bits{1, 0, 1, 0});

    const auto back = apply_swap(swapped, 0, 1);
    CHECK(back.table.bits == xor_ind.table.bits);
    CHECK(back.spectrum.coeffs == xor_ind.spectrum.coeffs);
    CHECK(back.fitness == xor_ind.fitness);

    CHECK_THROWS_AS(apply_swap(xor_ind, 1, 2), std::invalid_argument);
}

TEST_CASE("apply_swap equals full recomputation on random cases") {
    Mt19937Source rng(23);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 6 + static_cast<int>(rng.below(4));
        auto ind = evaluate(test::random_balanced_table(n, rng));
        const std::size_t size = ind.table.size();
        std::size_t y = rng.below(size), z = rng.below(size);
        while (ind.table.bits[y] == ind.table.bits[z]) {
            y = rng.below(size);
            z = rng.below(size);
        }
        const auto swapped = apply_swap(ind, y, z);
        CHECK(is_balanced(swapped.table.bits));
        const auto fresh = walsh_fast(swapped.table);
        CHECK(swapped.spectrum.coeffs == fresh.coeffs);
        CHECK(swapped.fitness == nonlinearity(fresh));
    }
}

TEST_CASE("hex and binary serialization round-trip") {
    const auto t1 = table_of(3, {0, 1, 0, 1, 0, 1, 1, 0});
    CHECK(to_hex(t1) == "56");  // 0101 0110
    CHECK(table_from_hex(3, "56").bits == t1.bits);
    CHECK(to_binary_string(t1) == "01010110");
    CHECK(table_from_binary("01010110").bits == t1.bits);

    const auto n1 = table_of(1, {1, 0});
    CHECK(to_hex(n1) == "8");
    CHECK(table_from_hex(1, "8").bits == n1.bits);
    CHECK_THROWS_AS(table_from_hex(1, "1"), std::invalid_argument);  // padding bit set
    CHECK_THROWS_AS(table_from_hex(3, "5"), std::invalid_argument);  // too short
    CHECK_THROWS_AS(table_from_hex(3, "5g"), std::invalid_argument);
    CHECK_THROWS_AS(table_from_binary("010"), std::invalid_argument);

    Mt19937Source rng(29);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(10));
        Bits bits(std::size_t{1} << n);
        for (auto& b : bits) b = rng.bit();
        const TruthTable t{n, bits};
        CHECK(table_from_hex(n, to_hex(t)).bits == t.bits);
        CHECK(table_from_binary(to_binary_string(t)).bits == t.bits);
    }
}
