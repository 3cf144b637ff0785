#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "reference_gf2.hpp"
#include "topocode/gf2.hpp"

using namespace topocode;

namespace {

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (coin(rng)) {
                m.set(r, c);
            }
        }
    }
    return m;
}

// Incidence matrix of K5: 5 vertices, 10 edges, two ones per column.
BitMatrix k5_incidence() {
    BitMatrix m(5, 10);
    std::size_t e = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            m.set(i, e);
            m.set(j, e);
            ++e;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rank on fixed matrices") {
    CHECK(rank(BitMatrix(3, 3)) == 0);
    CHECK(rank(BitMatrix::identity(4)) == 4);
    // Connected-graph incidence ranks V-1; cross-checked with the per-bit
    // elimination reference.
    const BitMatrix k5 = k5_incidence();
    CHECK(rank(k5) == 4);
    CHECK(testref::reference_rank(k5) == 4);
}

TEST_CASE("kernel basis on fixed matrices") {
    CHECK(kernel_basis(BitMatrix::identity(2)).empty());

    const BitMatrix row = BitMatrix::from_strings({"11"});
    const auto kernel = kernel_basis(row);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == BitVec::from_string("11"));

    // Cyclomatic number of K5 is E - V + 1 = 6.
    const auto cycles = kernel_basis(k5_incidence());
    CHECK(cycles.size() == 6);
    CHECK(10 - testref::reference_rank(k5_incidence()) == 6);
}

TEST_CASE("in_row_space") {
    const BitMatrix id3 = BitMatrix::identity(3);
    CHECK(in_row_space(id3, BitVec(3)));
    CHECK(in_row_space(id3, BitVec::from_string("101")));

    const BitMatrix m = BitMatrix::from_strings({"110", "011"});
    CHECK(in_row_space(m, BitVec::from_string("101")));
    CHECK_FALSE(in_row_space(m, BitVec::from_string("100")));

    CHECK_THROWS_AS(in_row_space(m, BitVec(4)), std::invalid_argument);
}

TEST_CASE("row_reduce fixed cases") {
    CHECK(row_reduce(BitMatrix::identity(3)) == BitMatrix::identity(3));
    CHECK(row_reduce(BitMatrix::from_strings({"11", "11"})) ==
          BitMatrix::from_strings({"11", "00"}));
}

TEST_CASE("randomized agreement with the per-bit reference") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 1 + rng() % 9;
        const BitMatrix m = random_matrix(rng, rows, cols);

        const std::size_t r = rank(m);
        CHECK(r == testref::reference_rank(m));
        CHECK(r <= std::min(rows, cols));

        // rank-nullity
        const auto kernel = kernel_basis(m);
        CHECK(kernel.size() == cols - r);
        for (const BitVec& v : kernel) {
            CHECK(m.multiply(v).none());
        }
        if (!kernel.empty()) {
            CHECK(rank(BitMatrix::from_rows(kernel)) == kernel.size());
        }

        // row_reduce is idempotent, preserves rank, and spans the same rows
        const BitMatrix reduced = row_reduce(m);
        CHECK(row_reduce(reduced) == reduced);
        CHECK(rank(reduced) == r);
        for (std::size_t i = 0; i < rows; ++i) {
            CHECK(in_row_space(reduced, m.row(i)));
            CHECK(in_row_space(m, reduced.row(i)));
        }
    }
}

TEST_CASE("membership is XOR-linear") {
    std::mt19937 rng(7);
    const BitMatrix m = random_matrix(rng, 5, 12);
    const RowSpace space(m);
    for (int trial = 0; trial < 100; ++trial) {
        BitVec a(12), b(12);
        for (std::size_t i = 0; i < 12; ++i) {
            if (rng() & 1) {
                a.set(i);
            }
            if (rng() & 1) {
                b.set(i);
            }
        }
        if (space.contains(a) && space.contains(b)) {
            CHECK(space.contains(a ^ b));
        }
    }
    // and explicitly: sums of rows always belong
    BitVec sum(12);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        sum ^= m.row(i);
        CHECK(space.contains(sum));
    }
}

TEST_CASE("canonical reduction makes row spaces comparable") {
    std::mt19937 rng(99);
    const BitMatrix m = random_matrix(rng, 6, 10);
    // Shuffle the rows and add row sums: the reduced forms must agree.
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(m.row(i));
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.push_back(rows[0] ^ rows[1]);
    const BitMatrix shuffled = BitMatrix::from_rows(rows);

    const BitMatrix a = row_reduce(m);
    const BitMatrix b = row_reduce(shuffled);
    const std::size_t r = rank(m);
    REQUIRE(rank(shuffled) == r);
    for (std::size_t i = 0; i < r; ++i) {
        CHECK(a.row(i) == b.row(i));
    }
}

TEST_CASE("bitvec basics") {
    BitVec v(70);
    v.set(0);
    v.set(64);
    v.set(69);
    CHECK(v.popcount() == 3);
    CHECK(v.get(64));
    v.flip(64);
    CHECK_FALSE(v.get(64));
    CHECK(v.support() == std::vector<std::size_t>{0, 69});
    CHECK(BitVec::from_string(v.to_string()) == v);
    CHECK_THROWS_AS(v ^ BitVec(3), std::invalid_argument);
}
