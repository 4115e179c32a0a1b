#include <doctest.h>

#include <random>
#include <stdexcept>
#include <set>

#include "hypercut/f2_matrix.hpp"
#include "test_util.hpp"

using namespace hypercut;

namespace {

// Rank via the row space: the span of the rows has size 2^rank.
int rank_by_rowspace(const F2Matrix& m) {
    std::set<std::uint64_t> span{0};
    for (int r = 0; r < m.rows(); ++r) {
        std::set<std::uint64_t> next(span);
        for (std::uint64_t v : span) next.insert(v ^ m.row_bits(r));
        span.swap(next);
    }
    int rank = 0;
    while ((size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

F2Matrix random_f2(std::mt19937_64& rng, int rows, int cols) {
    F2Matrix m(rows, cols);
    std::uniform_int_distribution<std::uint64_t> dist(0, full_vertex_set(cols));
    std::vector<std::uint64_t> bits;
    for (int r = 0; r < rows; ++r) bits.push_back(dist(rng));
    return F2Matrix::from_rows(cols, bits);
}

}  // namespace

TEST_CASE("f2 rank on known matrices") {
    CHECK(rank_f2(F2Matrix::identity(2)) == 2);
    CHECK(rank_f2(F2Matrix(3, 3)) == 0);
    CHECK(rank_f2(F2Matrix()) == 0);
    CHECK(rank_f2(F2Matrix::from_rows(2, {0b01, 0b10})) == 2);
    CHECK(rank_f2(F2Matrix::from_rows(3, {0b111, 0b011, 0b100})) == 2);
}

TEST_CASE("f2 rank matches the row-space oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        auto m = random_f2(rng, rows, cols);
        REQUIRE(rank_f2(m) == rank_by_rowspace(m));
    }
}

TEST_CASE("f2 rank is transpose invariant") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 8);
        const int cols = 1 + static_cast<int>(rng() % 8);
        auto m = random_f2(rng, rows, cols);
        REQUIRE(rank_f2(m) == rank_f2(m.transposed()));
    }
}

TEST_CASE("matrix accessors") {
    F2Matrix m(2, 3);
    m.set(1, 2, true);
    CHECK(m.at(1, 2));
    CHECK_FALSE(m.at(0, 2));
    CHECK(m.row_bits(1) == 0b100);
    CHECK(m.to_string() == "000\n001");
    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
    CHECK_THROWS_AS(F2Matrix::from_rows(2, {0b100}), std::out_of_range);
    CHECK(F2Matrix(0, 0).to_string() == "[0x0]");
}

TEST_CASE("bilinear slice of cross polynomials") {
    SUBCASE("two disjoint bridges give the identity") {
        auto f = AnfPolynomial::from_hyperedges(4, {0b0101, 0b1010});
        Cut cut(4, {0, 1}, {2, 3});
        CHECK(bilinear_slice(f, cut) == F2Matrix::identity(2));
    }
    SUBCASE("a pure 3-edge is invisible") {
        auto f = AnfPolynomial::from_hyperedges(3, {0b111});
        Cut cut(3, {0}, {1, 2});
        auto slice = bilinear_slice(f, cut);
        CHECK(slice.rows() == 1);
        CHECK(slice.cols() == 2);
        CHECK(slice.is_zero());
    }
    SUBCASE("cubic terms are dropped next to bilinear ones") {
        auto f = AnfPolynomial::from_hyperedges(4, {0b0101, 0b1010, 0b0111});
        Cut cut(4, {0, 1}, {2, 3});
        CHECK(bilinear_slice(f, cut) == F2Matrix::identity(2));
    }
    SUBCASE("local monomials violate the contract") {
        auto f = AnfPolynomial::from_hyperedges(4, {0b0011});
        Cut cut(4, {0, 1}, {2, 3});
        CHECK_THROWS_AS(bilinear_slice(f, cut), std::invalid_argument);
    }
}

TEST_CASE("bilinear slice is linear in the polynomial") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        auto cut = hypercut::testing::random_cut(rng, n);
        auto cross_only = [&](AnfPolynomial f) {
            AnfPolynomial out(n);
            for (VertexSet m : f.monomials())
                if ((m & cut.a_set()) && (m & cut.b_set())) out.toggle(m);
            return out;
        };
        auto f = cross_only(hypercut::testing::random_polynomial(rng, n, 8));
        auto g = cross_only(hypercut::testing::random_polynomial(rng, n, 8));
        auto lhs = bilinear_slice(f ^ g, cut);
        auto rhs = bilinear_slice(f, cut);
        for (int r = 0; r < rhs.rows(); ++r)
            for (int c = 0; c < rhs.cols(); ++c)
                if (bilinear_slice(g, cut).at(r, c)) rhs.set(r, c, !rhs.at(r, c));
        REQUIRE(lhs == rhs);
    }
}
