#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/gf2.hpp"

using namespace smallcover;

namespace {

constexpr BitVector e1 = BitVector::unit(0);
constexpr BitVector e2 = BitVector::unit(1);
constexpr BitVector e3 = BitVector::unit(2);
constexpr BitVector e4 = BitVector::unit(3);

std::vector<oracle::Mask> masks(const std::vector<BitVector>& vs) {
    std::vector<oracle::Mask> out;
    for (auto v : vs) out.push_back(v.bits());
    return out;
}

}  // namespace

TEST_CASE("rank") {
    CHECK(rank(std::vector{e1, e2, e3, e4}, 4) == 4);
    CHECK(rank(std::vector{e1, e2, e1 ^ e2}, 4) == 2);
    // four vectors at a bad vertex sum to zero
    CHECK(rank(std::vector{e4, e1 ^ e4, e1 ^ e2 ^ e4, e2 ^ e4}, 4) == 3);
    CHECK(rank(std::vector<BitVector>{}, 4) == 0);
    CHECK_THROWS_AS(rank(std::vector{BitVector{16}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(rank(std::vector{e1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(rank(std::vector{e1}, kMaxDimension + 1), std::invalid_argument);
}

TEST_CASE("is_independent") {
    CHECK_FALSE(is_independent(std::vector{e1, e2, e3, e1 ^ e2 ^ e3}, 4));
    CHECK(is_independent(std::vector{e1}, 4));

    const std::vector v{e1, e2, e3 ^ e4, e1 ^ e2 ^ e3};
    REQUIRE(oracle::rank(masks(v)) == 4);
    CHECK(is_independent(v, 4));
}

TEST_CASE("in_span") {
    CHECK(in_span(e1 ^ e2, std::vector{e1, e2}, 4));
    CHECK_FALSE(in_span(e4, std::vector{e1, e2, e3, e1 ^ e2 ^ e3}, 4));
    CHECK(in_span(e3 ^ e4, std::vector{e3, e4}, 4));
    CHECK(in_span(BitVector{}, std::vector<BitVector>{}, 4));
}

TEST_CASE("parity") {
    CHECK(parity(e1 ^ e2 ^ e3) == Parity::odd);
    CHECK(parity(e1 ^ e2) == Parity::even);
    CHECK(parity(e1 ^ e2 ^ e3 ^ e4) == Parity::even);
}

TEST_CASE("circuits") {
    using V = std::vector<std::vector<int>>;
    CHECK(circuits(std::vector{e1, e2, e1 ^ e2, e3}, 4) == V{{0, 1, 2}});
    CHECK(circuits(std::vector{e1, e2, e3, e4}, 4).empty());

    const std::vector bad_vertex{e4, e1 ^ e4, e1 ^ e2 ^ e4, e2 ^ e4};
    REQUIRE(oracle::circuits(masks(bad_vertex)) == V{{0, 1, 2, 3}});
    CHECK(circuits(bad_vertex, 4) == V{{0, 1, 2, 3}});

    // repeated vectors give size-2 circuits
    CHECK(circuits(std::vector{e1, e2, e1}, 4) == V{{0, 2}});
    CHECK_THROWS_AS(circuits(std::vector{e1, BitVector{}}, 4), InvariantError);
}

TEST_CASE("circuits match the brute-force oracle exhaustively for n = 3") {
    // every sequence of up to 6 nonzero vectors of Z_2^3
    for (int size = 0; size <= 6; ++size) {
        std::vector<int> digits(size, 0);
        while (true) {
            std::vector<BitVector> vs;
            for (int d : digits) vs.emplace_back(static_cast<std::uint32_t>(d + 1));
            const auto expected = oracle::circuits(masks(vs));
            const auto got = circuits(vs, 3);
            REQUIRE(got == expected);
            CHECK(rank(vs, 3) == oracle::rank(masks(vs)));
            // dependent lists have a circuit, independent ones none
            CHECK(got.empty() == is_independent(vs, 3));
            int i = 0;
            while (i < size && digits[i] == 6) digits[i++] = 0;
            if (i == size) break;
            ++digits[i];
        }
    }
}

TEST_CASE("circuits match the brute-force oracle on random inputs with n <= 5") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int size = static_cast<int>(rng() % 7);
        std::vector<BitVector> vs;
        for (int i = 0; i < size; ++i) vs.emplace_back(1 + rng() % ((1u << n) - 1));
        REQUIRE(circuits(vs, n) == oracle::circuits(masks(vs)));
    }
}

TEST_CASE("rank is invariant under permutations and elementary row operations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int size = static_cast<int>(rng() % 10);
        std::vector<BitVector> vs;
        for (int i = 0; i < size; ++i) vs.emplace_back(rng() % (1u << n));
        const int r = rank(vs, n);
        CHECK(r == oracle::rank(masks(vs)));
        CHECK(r <= std::min(size, n));

        auto shuffled = vs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(rank(shuffled, n) == r);

        if (size >= 2) {
            auto row_op = vs;
            const auto i = rng() % size;
            auto j = rng() % size;
            if (j == i) j = (i + 1) % size;
            row_op[i] ^= row_op[j];
            CHECK(rank(row_op, n) == r);
        }
    }
}

TEST_CASE("parity is additive") {
    for (std::uint32_t u = 0; u < 256; ++u) {
        for (std::uint32_t v = 0; v < 256; ++v) {
            const bool sum_odd = parity(BitVector{u} ^ BitVector{v}) == Parity::odd;
            const bool odd_u = parity(BitVector{u}) == Parity::odd;
            const bool odd_v = parity(BitVector{v}) == Parity::odd;
            REQUIRE(sum_odd == (odd_u != odd_v));
        }
    }
}
