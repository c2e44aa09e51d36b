#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "chartab/numeric.hpp"
#include "chartab/partition.hpp"
#include "chartab/spin.hpp"

using namespace chartab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Power-sum expansions of the Q-functions for strict shapes, built from the
// generating series exp(sum over odd k of 2 p_k u^k / k) and the Pfaffian
// expansion.  Completely independent of the bar-removal recursion.
using PSeries = std::map<std::vector<int>, Rat>;

void prune(PSeries& f) {
    for (auto it = f.begin(); it != f.end();) {
        if (it->second == Rat(0))
            it = f.erase(it);
        else
            ++it;
    }
}

PSeries add(PSeries f, const PSeries& g) {
    for (const auto& [key, c] : g) f[key] += c;
    prune(f);
    return f;
}

PSeries scale(PSeries f, const Rat& c) {
    for (auto& [key, v] : f) v *= c;
    prune(f);
    return f;
}

PSeries mul(const PSeries& f, const PSeries& g) {
    PSeries out;
    for (const auto& [ka, ca] : f) {
        for (const auto& [kb, cb] : g) {
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            std::sort(key.begin(), key.end(), std::greater<int>());
            out[key] += ca * cb;
        }
    }
    prune(out);
    return out;
}

PSeries p_times(const PSeries& f, int k) {
    PSeries out;
    for (const auto& [key, c] : f) {
        std::vector<int> v = key;
        v.push_back(k);
        std::sort(v.begin(), v.end(), std::greater<int>());
        out[v] = c;
    }
    return out;
}

const PSeries& one_row(int r) {
    static std::vector<PSeries> rows = {PSeries{{{}, Rat(1)}}};
    while (static_cast<int>(rows.size()) <= r) {
        const int m = static_cast<int>(rows.size());
        PSeries acc;
        for (int k = 1; k <= m; k += 2)
            acc = add(std::move(acc), scale(p_times(rows[m - k], k), Rat(2)));
        rows.push_back(scale(std::move(acc), Rat(1, m)));
    }
    return rows[r];
}

PSeries two_rows(int r, int s) {
    if (s == 0) return one_row(r);
    PSeries out = mul(one_row(r), one_row(s));
    for (int i = 1; i <= s; ++i) {
        PSeries term = scale(mul(one_row(r + i), one_row(s - i)), Rat(2));
        out = add(std::move(out), scale(std::move(term), Rat(i % 2 ? -1 : 1)));
    }
    return out;
}

PSeries schur_q(const Partition& lam) {
    std::vector<int> parts = lam.parts();
    if (parts.empty()) return PSeries{{{}, Rat(1)}};
    if (parts.size() % 2 == 1) parts.push_back(0);
    std::function<PSeries(const std::vector<int>&)> pf =
        [&](const std::vector<int>& v) -> PSeries {
        if (v.empty()) return PSeries{{{}, Rat(1)}};
        PSeries out;
        for (size_t k = 1; k < v.size(); ++k) {
            std::vector<int> rest;
            for (size_t t = 1; t < v.size(); ++t)
                if (t != k) rest.push_back(v[t]);
            PSeries term = mul(two_rows(v[0], v[k]), pf(rest));
            out = add(std::move(out),
                      scale(std::move(term), Rat(k % 2 ? 1 : -1)));
        }
        return out;
    };
    return pf(parts);
}

Rat coeff_of(const PSeries& f, const std::vector<int>& mu) {
    auto it = f.find(mu);
    return it == f.end() ? Rat(0) : it->second;
}

Rat two_to(long e) {
    Rat v(1);
    for (long i = 0; i < e; ++i) v *= 2;
    for (long i = 0; i > e; --i) v /= 2;
    return v;
}

// product formula for the degree column
Rat degree_formula(const Partition& lam) {
    const int n = lam.n();
    const auto& parts = lam.parts();
    const int len = static_cast<int>(parts.size());
    Rat value(Int(factorial(static_cast<unsigned long>(n))));
    for (int part : parts)
        value /= Rat(Int(factorial(static_cast<unsigned long>(part))));
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            value *= Rat(parts[i] - parts[j]);
            value /= Rat(parts[i] + parts[j]);
        }
    }
    return two_to((n - len) / 2) * value;
}

}  // namespace

TEST_CASE("k statistic on odd shapes") {
    CHECK(k_stat(P({3, 1})) == 0);
    CHECK(k_stat(P({1, 1, 1, 1})) == 3);  // 4 - s(4) = 3
    CHECK(k_stat(P({5, 3, 1})) == 0);
    CHECK(k_stat(P({3, 3, 3})) == 1);  // 3 - s(3) = 1
    CHECK(k_stat(P({1, 1, 1, 1, 1, 1, 1})) == 4);  // 7 - s(7) = 4
    CHECK(k_stat(P({})) == 0);
    CHECK_THROWS_AS(k_stat(P({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(k_stat(P({4})), std::invalid_argument);
}

TEST_CASE("spin_value validates its arguments") {
    CHECK_THROWS_AS(spin_value(P({3, 1}), P({3})), std::invalid_argument);
    CHECK_THROWS_AS(spin_value(P({2, 2}), P({3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(spin_value(P({3, 1}), P({2, 2})), std::invalid_argument);
    CHECK(spin_value(P({}), P({})) == 1);
}

TEST_CASE("small reduced tables match hand computation") {
    const SpinTable& z3 = reduced_table(3);
    REQUIRE(z3.rows.size() == 2);
    REQUIRE(z3.cols.size() == 2);
    CHECK(z3.rows[0] == P({3}));
    CHECK(z3.rows[1] == P({2, 1}));
    CHECK(z3.cols[0] == P({3}));
    CHECK(z3.cols[1] == P({1, 1, 1}));
    CHECK(z3.values(0, 0) == 1);
    CHECK(z3.values(0, 1) == 2);
    CHECK(z3.values(1, 0) == -1);
    CHECK(z3.values(1, 1) == 1);

    const SpinTable& z4 = reduced_table(4);
    REQUIRE(z4.rows.size() == 2);
    CHECK(z4.values(0, 0) == 1);   // (4) on (3,1)
    CHECK(z4.values(0, 1) == 2);   // (4) on (1^4)
    CHECK(z4.values(1, 0) == -1);  // (3,1) on (3,1)
    CHECK(z4.values(1, 1) == 4);   // (3,1) on (1^4)

    const SpinTable& z1 = reduced_table(1);
    REQUIRE(z1.rows.size() == 1);
    CHECK(z1.values(0, 0) == 1);
}

TEST_CASE("strict shapes and odd classes are equinumerous") {
    for (int n = 1; n <= 14; ++n) {
        CHECK(generate_partitions(n, Filter::distinct()).size() ==
              generate_partitions(n, Filter::odd_parts()).size());
    }
}

TEST_CASE("recursion agrees with the Q-function power-sum expansion") {
    for (int n = 1; n <= 10; ++n) {
        const SpinTable& table = reduced_table(n);
        for (size_t i = 0; i < table.rows.size(); ++i) {
            const Partition& lam = table.rows[i];
            const PSeries q = schur_q(lam);
            const long llam = static_cast<long>(lam.length());
            const long eps = (n - llam) % 2;

            // every power sum in the support has odd parts only
            for (const auto& [key, c] : q)
                for (int part : key) CHECK(part % 2 == 1);

            // self inner product at the spin specialization is 2^length
            Rat norm(0);
            for (const auto& [key, c] : q) {
                const Partition mu(key);
                norm += c * c * Rat(stats(mu, 2).z) /
                        two_to(static_cast<long>(mu.length()));
            }
            CHECK(norm == two_to(llam));

            for (size_t j = 0; j < table.cols.size(); ++j) {
                const Partition& mu = table.cols[j];
                const long lmu = static_cast<long>(mu.length());
                REQUIRE((llam + lmu + eps) % 2 == 0);
                const Rat expected = Rat(stats(mu, 2).z) *
                                     coeff_of(q, mu.parts()) /
                                     two_to((llam + lmu + eps) / 2);
                CHECK(Rat(table.values(i, j)) == expected);
            }
        }
    }
}

TEST_CASE("degree column matches the product formula") {
    for (int n = 1; n <= 12; ++n) {
        const SpinTable& table = reduced_table(n);
        const size_t last = table.cols.size() - 1;
        REQUIRE(table.cols[last] == P(std::vector<int>(n, 1)));
        for (size_t i = 0; i < table.rows.size(); ++i) {
            const Rat g = degree_formula(table.rows[i]);
            CHECK(g.get_den() == 1);
            CHECK(g > 0);
            CHECK(Rat(table.values(i, last)) == g);
        }
    }
}

TEST_CASE("elementary divisors factor through k and the odd part of b") {
    SUBCASE("frozen instances") {
        const SpinSnfReport r1 = verify_spin_snf(1);
        CHECK(r1.lhs == std::vector<Int>{1});
        CHECK(r1.matches);
        const SpinSnfReport r3 = verify_spin_snf(3);
        CHECK(r3.lhs == std::vector<Int>{1, 3});
        CHECK(r3.matches);
        const SpinSnfReport r4 = verify_spin_snf(4);
        CHECK(r4.lhs == std::vector<Int>{1, 6});
        CHECK(r4.matches);
    }
    SUBCASE("range") {
        for (int n = 1; n <= 10; ++n) {
            const SpinSnfReport rep = verify_spin_snf(n);
            CHECK(rep.matches);
        }
    }
}

TEST_CASE("odd prime scan is well formed and never asserts") {
    for (int p : {3, 5}) {
        for (int n = 1; n <= 10; ++n) {
            const SpinScan scan = scan_spin_p_conjecture(n, p);
            CHECK(scan.sizes_match);
            CHECK(scan.lhs.size() == scan.rhs.size());
        }
    }
    // frozen small cells: the restricted table keeps only (2,1) row and
    // (1,1,1) column at n = 3, p = 3, with entry 1, and the right side
    // strips 3! down to 1
    const SpinScan small = scan_spin_p_conjecture(3, 3);
    CHECK(small.lhs == std::vector<Int>{1});
    CHECK(small.rhs == std::vector<Int>{1});
    const SpinScan seven = scan_spin_p_conjecture(7, 5);
    CHECK(seven.lhs == std::vector<Int>{1, 1, 6, 252});
    CHECK(seven.rhs == std::vector<Int>{1, 1, 6, 252});
    CHECK_THROWS_AS(scan_spin_p_conjecture(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(scan_spin_p_conjecture(6, 9), std::invalid_argument);
    CHECK_THROWS_AS(scan_spin_p_conjecture(6, 1), std::invalid_argument);
}

TEST_CASE("deformed table at t = -1 reproduces the recursion up to 2-powers") {
    for (int n = 1; n <= 7; ++n) {
        const TMinusOneReport rep = cross_check_tminus1(n);
        CHECK(rep.support_agrees);
        CHECK(rep.zeros_agree);
        CHECK(rep.ratios_power_of_two);
        CHECK(rep.signs_positive);

        const SpinTable& table = reduced_table(n);
        for (size_t i = 0; i < rep.exponents.size(); ++i) {
            const long llam = static_cast<long>(table.rows[i].length());
            const long eps = (n - llam) % 2;
            for (size_t j = 0; j < rep.exponents[i].size(); ++j) {
                if (!rep.exponents[i][j]) continue;
                const long lmu = static_cast<long>(table.cols[j].length());
                CHECK(*rep.exponents[i][j] == (llam - lmu + eps) / 2);
            }
        }
    }
}
