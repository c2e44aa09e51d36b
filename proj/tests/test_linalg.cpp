#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chartab/exact_linalg.hpp"

using namespace chartab;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

IntMatrix random_matrix(std::mt19937& rng, size_t rows, size_t cols, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

// product of random elementary row operations applied to the identity
IntMatrix random_unimodular(std::mt19937& rng, size_t n, int ops = 12) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = pick(rng), j = pick(rng);
        if (i == j) {
            for (size_t c = 0; c < n; ++c) u(static_cast<size_t>(i), c) *= -1;
            continue;
        }
        Int f = coef(rng);
        for (size_t c = 0; c < n; ++c)
            u(static_cast<size_t>(i), c) += f * u(static_cast<size_t>(j), c);
    }
    return u;
}

void check_chain(const std::vector<Int>& d) {
    for (size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (i + 1 < d.size()) {
            if (d[i] == 0)
                CHECK(d[i + 1] == 0);
            else
                CHECK(divides(d[i], d[i + 1]));
        }
    }
}

IntMatrix diag_matrix(const std::vector<Int>& v) {
    IntMatrix m(v.size(), v.size());
    for (size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK(det(from_rows({{7}})) == 7);
    CHECK(det(from_rows({{1, 1}, {-1, 2}})) == 3);
    CHECK(det(from_rows({{1, 1, 1}, {2, 0, -1}, {1, -1, 1}})) == -6);
    CHECK(det(from_rows({{2, 4}, {1, 2}})) == 0);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("bareiss agrees with rational elimination") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 1 + static_cast<size_t>(trial % 6);
        IntMatrix a = random_matrix(rng, n, n);
        CHECK(Rat(det(a)) == det_field(to_rational(a)));
    }
}

TEST_CASE("smith normal form of known matrices") {
    auto s = snf(from_rows({{1, 1, 1}, {2, 0, -1}, {1, -1, 1}}));
    CHECK(s.diag == std::vector<Int>{1, 1, 6});

    // d1 = gcd of entries = 2, d1*d2 = gcd of 2x2 minors = 4, product = |det| = 624
    s = snf(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    CHECK(s.diag == std::vector<Int>{2, 2, 156});

    s = snf(IntMatrix(2, 2));
    CHECK(s.diag == std::vector<Int>{0, 0});

    s = snf(IntMatrix(0, 0));
    CHECK(s.diag.empty());
}

TEST_CASE("smith multipliers reconstruct the diagonal") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        size_t rows = 1 + static_cast<size_t>(rng() % 5);
        size_t cols = 1 + static_cast<size_t>(rng() % 5);
        IntMatrix a = random_matrix(rng, rows, cols);
        if (trial % 4 == 0) {  // force rank deficiency
            for (size_t j = 0; j < cols; ++j) a(rows - 1, j) = (rows > 1) ? a(0, j) : Int(0);
        }
        auto s = snf(a, true);
        check_chain(s.diag);
        IntMatrix d(rows, cols);
        for (size_t t = 0; t < s.diag.size(); ++t) d(t, t) = s.diag[t];
        CHECK(s.u * a * s.v == d);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
    }
}

TEST_CASE("smith normal form is invariant under unimodular factors") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        size_t n = 2 + static_cast<size_t>(trial % 4);
        IntMatrix a = random_matrix(rng, n, n);
        IntMatrix u = random_unimodular(rng, n);
        IntMatrix v = random_unimodular(rng, n);
        CHECK(abs(det(u)) == 1);
        CHECK(snf(u * a * v).diag == snf(a).diag);
        CHECK(det(u * a * v) == det(u) * det(a) * det(v));
    }
}

TEST_CASE("diagonal smith form") {
    CHECK(snf_diag({2, 3}) == std::vector<Int>{1, 6});
    CHECK(snf_diag({3, 2}) == std::vector<Int>{1, 6});
    CHECK(snf_diag({6, 4}) == std::vector<Int>{2, 12});
    CHECK(snf_diag({}) == std::vector<Int>{});
    CHECK(snf_diag({1, 2, 6}) == std::vector<Int>{1, 2, 6});  // idempotent on chains
    CHECK_THROWS_AS(snf_diag({0}), std::invalid_argument);
    CHECK_THROWS_AS(snf_diag({-2}), std::invalid_argument);
}

TEST_CASE("diagonal smith form agrees with the matrix algorithm") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(1, 60);
    for (int trial = 0; trial < 25; ++trial) {
        size_t n = 1 + static_cast<size_t>(rng() % 6);
        std::vector<Int> v(n);
        for (auto& x : v) x = d(rng);
        auto chain = snf_diag(v);
        check_chain(chain);
        CHECK(chain == snf(diag_matrix(v)).diag);
    }
}

TEST_CASE("chain product") {
    CHECK(snf_chain_product({1, 2}, {1, 3}) == std::vector<Int>{1, 6});
    CHECK(snf_chain_product({2, 1}, {3, 1}) == std::vector<Int>{1, 6});
    CHECK_THROWS_AS(snf_chain_product({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("coprime part") {
    CHECK(coprime_part(24, {Int(2)}) == 3);
    CHECK(coprime_part(6, {Int(2), Int(3)}) == 1);
    CHECK(coprime_part(35, {Int(2)}) == 35);
    CHECK(coprime_part(1, {Int(5)}) == 1);
    CHECK_THROWS_AS(coprime_part(0, {Int(2)}), std::invalid_argument);
    CHECK_THROWS_AS(coprime_part(4, {Int(1)}), std::invalid_argument);
}

TEST_CASE("solve_right and integrality") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 1 + static_cast<size_t>(rng() % 5);
        IntMatrix x = random_matrix(rng, n, n);
        if (det(x) == 0) continue;
        IntMatrix d0 = random_matrix(rng, 1 + static_cast<size_t>(rng() % 4), n);
        IntMatrix y = d0 * x;
        RatMatrix d = solve_right(y, x);
        CHECK(is_integral(d));
        CHECK(to_integral(d) == d0);
    }
    CHECK_THROWS_AS(solve_right(from_rows({{1, 1}}), from_rows({{1, 1}, {1, 1}})),
                    std::domain_error);
    CHECK_THROWS_AS(inverse(to_rational(from_rows({{1, 1}, {2, 2}}))), std::domain_error);

    RatMatrix half(1, 1);
    half(0, 0) = Rat(1, 2);
    CHECK(!is_integral(half));
    CHECK_THROWS_AS(to_integral(half), std::domain_error);
}
