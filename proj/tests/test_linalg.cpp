#include "tdc/dim.hpp"
#include "tdc/linalg.hpp"
#include "tdc/rational.hpp"

#include <doctest.h>

#include <random>

using namespace tdc;
using linalg::Matrix;
using linalg::Vector;

namespace {

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
    std::uniform_int_distribution<int> v(-3, 3), z(0, zero_bias), den(1, 4);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (z(rng) == 0) m(i, j) = q(v(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rationals parse to lowest terms") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2")) == "-2");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("dimension lattice absorbs infinity") {
    const Dim inf = Dim::infinite();
    CHECK(Dim(2) + Dim(3) == Dim(5));
    CHECK((inf + Dim(4)).is_infinite());
    CHECK(Dim(7) < inf);
    CHECK(inf.to_string() == "inf");
    CHECK_THROWS(inf.value());
}

TEST_CASE("rank, kernel and cokernel of a small matrix") {
    Matrix m(3, 4);
    // rows: (1 2 0 1), (2 4 1 3), (3 6 1 4) -> rank 2
    const int data[3][4] = {{1, 2, 0, 1}, {2, 4, 1, 3}, {3, 6, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = data[i][j];
    CHECK(linalg::rank(m) == 2);
    const auto k = linalg::kernel(m);
    CHECK(k.dimension() == 2);
    for (const auto& v : k.basis) CHECK(linalg::is_zero(m * v));
    const linalg::Cokernel c(m);
    CHECK(c.dimension() == 1);
    CHECK(c.contains_image(m * Vector{1, 1, 1, 1}));
    CHECK_FALSE(c.contains_image(Vector{0, 0, 1}));
}

TEST_CASE("solve is exact and rejects inconsistent systems") {
    Matrix a(2, 2);
    a(0, 0) = 1, a(0, 1) = 1, a(1, 0) = 1, a(1, 1) = 1;
    CHECK_FALSE(linalg::solve(a, {1, 2}).has_value());
    const auto x = linalg::solve(a, {2, 2});
    REQUIRE(x);
    CHECK(a * *x == Vector{2, 2});
}

TEST_CASE("rank-nullity and solve round trip on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        const Matrix m = random_matrix(rng, r, c, static_cast<int>(trial % 3));
        const auto k = linalg::kernel(m);
        CHECK(linalg::rank(m) + k.dimension() == c);
        CHECK(linalg::rank(m) == linalg::rank(m.transposed()));
        for (const auto& v : k.basis) CHECK(linalg::is_zero(m * v));
        // kernel coordinates recover a random kernel combination
        Vector combo(c);
        Vector coeffs;
        for (const auto& v : k.basis) {
            coeffs.push_back(Rational(static_cast<long>(rng() % 5) - 2));
            combo = linalg::add(combo, linalg::scaled(v, coeffs.back()));
        }
        CHECK(k.coordinates(combo) == coeffs);
        // image vectors are solvable and lie in the image
        Vector x(c);
        for (auto& xi : x) xi = q(static_cast<long>(rng() % 7) - 3, 2);
        const Vector b = m * x;
        const auto sol = linalg::solve(m, b);
        REQUIRE(sol);
        CHECK(m * *sol == b);
        const linalg::Cokernel cok(m);
        CHECK(cok.contains_image(b));
        CHECK(cok.dimension() + linalg::rank(m) == r);
        CHECK(linalg::is_zero(cok.coordinates(b)));
    }
}

TEST_CASE("rref is deterministic") {
    std::mt19937_64 rng(11);
    const Matrix m = random_matrix(rng, 5, 6, 1);
    CHECK(linalg::rref(m).reduced == linalg::rref(m).reduced);
    CHECK(linalg::rref(m).pivot_columns == linalg::rref(m).pivot_columns);
}
