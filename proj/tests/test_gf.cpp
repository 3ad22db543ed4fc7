#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsd/gf.hpp"

using namespace qsd;

namespace {

GFMatrix fano_incidence(int p) {
    // difference set {1,2,4} mod 7, blocks developed cyclically
    std::vector<int> e(49, 0);
    for (int g = 0; g < 7; g++)
        for (int d : {1, 2, 4}) e[((g + d) % 7) * 7 + g] = 1;
    return GFMatrix(p, 7, 7, std::move(e));
}

GFMatrix random_matrix(std::mt19937& rng, int p, std::size_t rows, std::size_t cols) {
    std::vector<int> e(rows * cols);
    for (auto& x : e) x = int(rng() % p);
    return GFMatrix(p, rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("prime validation") {
    CHECK_THROWS_AS(GFMatrix(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GFMatrix(1, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(GFMatrix(13, 2, 2));
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("rank examples") {
    for (int p : {2, 3, 5, 7, 11, 13})
        CHECK(rank_mod_p(GFMatrix::identity(p, 6)) == 6);
    // Fano plane over GF(2) has 2-rank 4
    CHECK(oracle::rank_by_span_count(fano_incidence(2)) == 4);
    CHECK(rank_mod_p(fano_incidence(2)) == 4);
    // empty matrix
    CHECK(rank_mod_p(GFMatrix(3, 0, 0)) == 0);
    CHECK(rank_mod_p(GFMatrix(3, 3, 5)) == 0);  // zero matrix
}

TEST_CASE("rref examples") {
    SUBCASE("zero matrix") {
        auto [r, piv] = rref(GFMatrix(3, 2, 3));
        CHECK(piv.empty());
        CHECK(r == GFMatrix(3, 2, 3));
    }
    SUBCASE("identity") {
        auto [r, piv] = rref(GFMatrix::identity(5, 4));
        CHECK(piv == std::vector<std::size_t>{0, 1, 2, 3});
        CHECK(r == GFMatrix::identity(5, 4));
    }
    SUBCASE("dependent rows over GF(3)") {
        auto m = GFMatrix::from_rows(3, {{1, 1}, {2, 2}});
        auto [r, piv] = rref(m);
        CHECK(piv == std::vector<std::size_t>{0});
        CHECK(r == GFMatrix::from_rows(3, {{1, 1}, {0, 0}}));
    }
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace_basis(GFMatrix::identity(3, 5)).rows() == 0);
    auto m = GFMatrix::from_rows(3, {{1, 1, 1}});
    auto ns = nullspace_basis(m);
    CHECK(ns.rows() == 2);
    for (std::size_t i = 0; i < ns.rows(); i++) {
        std::vector<int> row;
        for (std::size_t j = 0; j < ns.cols(); j++) row.push_back(ns.at(i, j));
        CHECK(syndrome(m, GFVector(3, row)).is_zero());
    }
}

TEST_CASE("syndrome examples") {
    auto m = GFMatrix::from_rows(3, {{1, 1, 1}});
    CHECK(syndrome(m, GFVector(3, {0, 0, 0})).is_zero());
    CHECK(syndrome(m, GFVector(3, {1, 1, 1})).is_zero());  // 3 = 0 mod 3
    CHECK_FALSE(syndrome(m, GFVector(3, {1, 1, 0})).is_zero());
    CHECK_THROWS_AS(syndrome(m, GFVector(3, {1, 1})), std::invalid_argument);
}

TEST_CASE("row_space_contains examples") {
    auto m = GFMatrix::from_rows(2, {{1, 0}});  // identity with last row removed
    CHECK(row_space_contains(m, GFVector(2, {1, 0})));
    CHECK_FALSE(row_space_contains(m, GFVector(2, {0, 1})));
    CHECK_THROWS_AS(row_space_contains(m, GFVector(2, {1, 0, 0})), std::invalid_argument);
}

TEST_CASE("rank/nullity identity and related properties on random matrices") {
    std::mt19937 rng(20240817);
    int cases = 0;
    for (int p : {2, 3, 5}) {
        for (int iter = 0; iter < 400; iter++) {
            std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            auto m = random_matrix(rng, p, rows, cols);
            auto ns = nullspace_basis(m);
            std::size_t rank = rank_mod_p(m);
            CHECK(rank + ns.rows() == cols);
            CHECK(rank == rank_mod_p(m.transposed()));
            // every nullspace row has zero syndrome
            for (std::size_t i = 0; i < ns.rows(); i++) {
                std::vector<int> row;
                for (std::size_t j = 0; j < ns.cols(); j++) row.push_back(ns.at(i, j));
                CHECK(syndrome(m, GFVector(p, row)).is_zero());
            }
            // rref idempotent
            auto r1 = rref(m);
            auto r2 = rref(r1.r);
            CHECK(r1.r == r2.r);
            CHECK(r1.pivots == r2.pivots);
            cases++;
        }
    }
    CHECK(cases == 1200);
}

TEST_CASE("rank agrees with span-enumeration oracle on small matrices") {
    std::mt19937 rng(7);
    for (int p : {2, 3, 5}) {
        for (int iter = 0; iter < 30; iter++) {
            std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
            auto m = random_matrix(rng, p, rows, cols);
            CHECK(rank_mod_p(m) == oracle::rank_by_span_count(m));
        }
    }
}

TEST_CASE("row space membership is invariant under row operations") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 50; iter++) {
        auto m = random_matrix(rng, 3, 4, 6);
        // any row of m is in the span
        std::size_t i = rng() % 4;
        std::vector<int> row;
        for (std::size_t j = 0; j < 6; j++) row.push_back(m.at(i, j));
        CHECK(row_space_contains(m, GFVector(3, row)));
    }
}
