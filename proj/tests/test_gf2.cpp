#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "embcert/errors.hpp"
#include "embcert/gf2.hpp"

using embcert::gf2::BitMatrix;
using embcert::gf2::BitVector;
using embcert::gf2::EchelonBasis;
using embcert::gf2::is_in_span;
using embcert::gf2::kernel_basis;
using embcert::gf2::rank;

namespace {

BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

// Vertex-edge incidence matrix of the triangle graph C3.
BitMatrix triangle_incidence() {
    BitMatrix m(3, 3); // edges 01, 02, 12
    m.set(0, 0); m.set(1, 0);
    m.set(0, 1); m.set(2, 1);
    m.set(1, 2); m.set(2, 2);
    return m;
}

BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng)) m.set(r, c);
    return m;
}

} // namespace

TEST_CASE("rank of identity and zero matrices") {
    CHECK(rank(identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 7)) == 0);
}

TEST_CASE("rank of a graph incidence matrix is n - components") {
    // K5 incidence: 10 edges x 5 vertices, rank 4.
    BitMatrix m(10, 5);
    std::size_t e = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            m.set(e, i);
            m.set(e, j);
            ++e;
        }
    // rank of the transpose equals the rank.
    BitMatrix t(5, 10);
    for (std::size_t r = 0; r < 10; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            if (m.get(r, c)) t.set(c, r);
    CHECK(rank(t) == 4);
}

TEST_CASE("kernel of the identity is empty") {
    CHECK(kernel_basis(identity(5)).empty());
}

TEST_CASE("kernel of the triangle incidence is the full cycle") {
    const auto basis = kernel_basis(triangle_incidence());
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].popcount() == 3);
}

TEST_CASE("kernel vectors satisfy M v = 0") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_matrix(rng, 1 + trial % 20, 1 + (trial * 3) % 25);
        for (const auto& v : kernel_basis(m)) CHECK_FALSE(m.multiply(v).any());
    }
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const auto m = random_matrix(rng, rows, cols);
        CHECK(rank(m) + kernel_basis(m).size() == cols);
    }
}

TEST_CASE("span membership") {
    const BitVector zero(4);
    CHECK(is_in_span({}, zero));

    BitVector e1(4), e2(4), sum(4);
    e1.set(0);
    e2.set(1);
    sum.set(0);
    sum.set(1);
    const std::vector<BitVector> basis{e1, e2};
    CHECK(is_in_span(basis, sum));
    BitVector e3(4);
    e3.set(2);
    CHECK_FALSE(is_in_span(basis, e3));
}

TEST_CASE("span membership rejects mismatched lengths") {
    BitVector a(3), b(4);
    a.set(0);
    const std::vector<BitVector> basis{a};
    CHECK_THROWS_AS(is_in_span(basis, b), embcert::ArgumentError);
}

TEST_CASE("echelon basis tracks rank incrementally") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_matrix(rng, 12, 18);
        EchelonBasis ech;
        for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
        CHECK(ech.rank() == rank(m));
    }
}

TEST_CASE("deterministic outputs on identical inputs") {
    std::mt19937 rng(3);
    const auto m = random_matrix(rng, 20, 33);
    const auto b1 = kernel_basis(m);
    const auto b2 = kernel_basis(m);
    CHECK(b1 == b2);
    CHECK(rank(m) == rank(m));
}

TEST_CASE("canonical order compares the lowest differing coordinate") {
    BitVector a(70), b(70);
    a.set(3);
    b.set(3);
    b.set(69);
    CHECK(BitVector::canonical_less(a, b));
    CHECK_FALSE(BitVector::canonical_less(b, a));
    CHECK_FALSE(BitVector::canonical_less(a, a));

    // 0 sorts before 1 at the first difference (here: coordinate 2).
    BitVector c(70), d(70);
    c.set(5);
    d.set(2);
    CHECK(BitVector::canonical_less(c, d));
    CHECK_FALSE(BitVector::canonical_less(d, c));
}
