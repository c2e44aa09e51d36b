#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "chartab/partition.hpp"

using namespace chartab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<std::vector<int>> raw(const std::vector<Partition>& v) {
    std::vector<std::vector<int>> out;
    for (const auto& p : v) out.push_back(p.parts());
    return out;
}

}  // namespace

TEST_CASE("generation in canonical order") {
    auto all4 = generate_partitions(4);
    CHECK(raw(all4) == std::vector<std::vector<int>>{
                           {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

    CHECK(raw(generate_partitions(4, Filter::regular(3))) ==
          std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}});
    CHECK(raw(generate_partitions(4, Filter::class_regular(3))) ==
          std::vector<std::vector<int>>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(raw(generate_partitions(4, Filter::distinct())) ==
          std::vector<std::vector<int>>{{4}, {3, 1}});
    CHECK(raw(generate_partitions(4, Filter::odd_parts())) ==
          std::vector<std::vector<int>>{{3, 1}, {1, 1, 1, 1}});
}

TEST_CASE("partition counts match the classical sequence") {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
    for (int n = 0; n <= 14; ++n)
        CHECK(generate_partitions(n).size() == static_cast<size_t>(p[n]));
}

TEST_CASE("n = 0 gives the empty partition under every filter") {
    for (Filter f : {Filter::all(), Filter::regular(2), Filter::class_regular(5)}) {
        auto ps = generate_partitions(0, f);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].empty());
    }
    CHECK(Partition{}.is_regular(2));
    CHECK(Partition{}.is_class_regular(2));
}

TEST_CASE("regular and class-regular sets are equinumerous") {
    for (int n = 1; n <= 14; ++n)
        for (int r = 2; r <= 8; ++r)
            CHECK(generate_partitions(n, Filter::regular(r)).size() ==
                  generate_partitions(n, Filter::class_regular(r)).size());
}

TEST_CASE("generation output is strictly canonical-sorted and duplicate-free") {
    for (int n : {6, 9}) {
        auto ps = generate_partitions(n);
        for (size_t i = 1; i < ps.size(); ++i) CHECK(canonical_before(ps[i - 1], ps[i]));
        std::set<Partition> uniq(ps.begin(), ps.end());
        CHECK(uniq.size() == ps.size());
    }
}

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK_THROWS_AS(Filter::regular(1), std::invalid_argument);
}

TEST_CASE("multiplicity round trip") {
    Partition mu = P({5, 3, 3, 1, 1, 1});
    CHECK(mu.multiplicity(3) == 2);
    CHECK(mu.multiplicity(2) == 0);
    CHECK(mu.multiplicity(6) == 0);
    std::vector<std::pair<int, long>> mults;
    for (auto [v, m] : mu.runs()) mults.emplace_back(v, m);
    std::reverse(mults.begin(), mults.end());
    CHECK(Partition::from_multiplicities(mults) == mu);
    CHECK_THROWS_AS(Partition::from_multiplicities({{2, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_multiplicities({{2, 0}}), std::invalid_argument);
}

TEST_CASE("stats of small partitions") {
    auto st = stats(P({1, 1, 1}), 2);
    CHECK(st.z == 6);
    CHECK(st.a == 1);
    CHECK(st.b == 6);
    CHECK(st.defect == 1);

    st = stats(P({3, 3, 1, 1, 1}), 2);
    CHECK(st.z == 108);
    CHECK(st.a == 9);
    CHECK(st.b == 12);
    CHECK(st.defect == 2);

    st = stats(Partition{}, 3);
    CHECK(st.z == 1);
    CHECK(st.a == 1);
    CHECK(st.b == 1);
    CHECK(st.defect == 0);
}

TEST_CASE("z = a*b and class sizes sum to n!") {
    for (int n = 1; n <= 10; ++n) {
        Int total = 0;
        for (const auto& mu : generate_partitions(n)) {
            auto st = stats(mu, 2);
            CHECK(st.z == st.a * st.b);
            CHECK(divides(st.z, factorial(static_cast<unsigned long>(n))));
            total += factorial(static_cast<unsigned long>(n)) / st.z;
        }
        CHECK(total == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("aggregate over class-regular classes") {
    auto C = generate_partitions(4, Filter::class_regular(3));
    auto agg = aggregate(C, 3);
    CHECK(agg.a == 32);
    CHECK(agg.b == 96);
    CHECK(agg.defect == 1);
}

TEST_CASE("aggregate identity b = r^d * a over class-regular classes") {
    for (int n = 1; n <= 9; ++n)
        for (int r = 2; r <= 8; ++r) {
            auto agg = aggregate(generate_partitions(n, Filter::class_regular(r)), r);
            CHECK(agg.b == int_pow(static_cast<long>(r),
                                   static_cast<unsigned long>(agg.defect)) *
                               agg.a);
        }
}

TEST_CASE("for r > n all partitions count with zero defect") {
    int n = 6, r = 7;
    auto Pn = generate_partitions(n);
    CHECK(generate_partitions(n, Filter::regular(r)) == Pn);
    CHECK(generate_partitions(n, Filter::class_regular(r)) == Pn);
    auto agg = aggregate(Pn, r);
    CHECK(agg.defect == 0);
    CHECK(agg.a == agg.b);
}

TEST_CASE("radix decomposition") {
    auto d = radix(7, 3);
    CHECK(d.digits == std::vector<int>{1, 2});
    CHECK(d.degree() == 0);
    CHECK(d.leading() == 1);
    CHECK(d.quotient() == 2);
    CHECK(d.digit_sum() == 3);

    d = radix(4, 2);
    CHECK(d.digits == std::vector<int>{0, 0, 1});
    CHECK(d.degree() == 2);
    CHECK(d.leading() == 1);
    CHECK(d.quotient() == 0);
    CHECK(d.defect() == 3);
    CHECK(d.q_at(1) == 2);
    CHECK(d.h_at(1) == 4);
    CHECK(d.q_at(3) == 0);

    d = radix(0, 5);
    CHECK(d.digits.empty());
    CHECK(d.digit_sum() == 0);
    CHECK(d.defect() == 0);
    CHECK_THROWS_AS(d.degree(), std::domain_error);

    CHECK_THROWS_AS(radix(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(radix(3, 1), std::invalid_argument);
}

TEST_CASE("radix identity m = (r-1)d(m) + digit sum") {
    for (int r : {2, 3, 5, 10})
        for (long m = 0; m <= 10000; ++m) {
            auto d = radix(m, r);
            CHECK(m == (r - 1) * d.defect() + d.digit_sum());
        }
}

TEST_CASE("digit reconstruction") {
    for (int r : {2, 3, 7})
        for (long m = 0; m <= 500; ++m) {
            auto d = radix(m, r);
            long v = 0, p = 1;
            for (int dig : d.digits) {
                CHECK(dig >= 0);
                CHECK(dig < r);
                v += dig * p;
                p *= r;
            }
            CHECK(v == m);
        }
}

TEST_CASE("glaisher map on a known value") {
    CHECK(glaisher(P({3, 3, 1, 1, 1}), 2) == P({6, 2, 1}));
    CHECK(glaisher(Partition{}, 2) == Partition{});
    CHECK_THROWS_AS(glaisher(P({2, 1}), 2), std::invalid_argument);
}

TEST_CASE("glaisher is a size-preserving bijection onto the regular set") {
    for (int n = 1; n <= 12; ++n)
        for (int r = 2; r <= 5; ++r) {
            auto C = generate_partitions(n, Filter::class_regular(r));
            auto R = generate_partitions(n, Filter::regular(r));
            std::set<Partition> image;
            for (const auto& mu : C) {
                Partition rho = glaisher(mu, r);
                CHECK(rho.n() == n);
                CHECK(rho.is_regular(r));
                image.insert(rho);
            }
            CHECK(image.size() == C.size());
            CHECK(image == std::set<Partition>(R.begin(), R.end()));
        }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({2, 2}), P({3, 1})));
    CHECK(dominance_leq(P({1, 1, 1, 1}), P({4})));
    CHECK(!dominance_leq(P({3, 1}), P({2, 2})));
    CHECK(dominance_leq(P({3, 1}), P({3, 1})));
    // incomparable pair
    CHECK(!dominance_leq(P({3, 3}), P({4, 1, 1})));
    CHECK(!dominance_leq(P({4, 1, 1}), P({3, 3})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("canonical order extends dominance") {
    for (int n = 1; n <= 10; ++n) {
        auto ps = generate_partitions(n);
        for (const auto& mu : ps)
            for (const auto& lam : ps)
                if (!(mu == lam) && dominance_leq(mu, lam))
                    CHECK(canonical_before(lam, mu));
    }
}
