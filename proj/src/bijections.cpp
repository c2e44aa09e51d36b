#include "chartab/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace chartab {

namespace {

void check_residue(int r, int s, const char* who) {
    if (r < 2) throw std::invalid_argument(std::string(who) + ": r must be at least 2");
    if (s < 1 || s > r - 1)
        throw std::invalid_argument(std::string(who) + ": residue must lie in 1..r-1");
}

}  // namespace

DefectNumbers defect_numbers(long m, int r) {
    if (m < 1) throw std::invalid_argument("defect_numbers: m must be positive");
    if (r < 2) throw std::invalid_argument("defect_numbers: r must be at least 2");
    DefectNumbers out;
    out.m = m;
    out.r = r;
    for (long e = 1; e <= m; ++e) {
        auto rd = radix(e, r);
        int a = rd.degree();
        long q = rd.quotient();
        long q_above = m;
        for (int j = 0; j <= a; ++j) q_above /= r;  // floor(m / r^{a+1})
        if (q == q_above)
            out.non_defect.push_back(e);
        else
            out.defect.push_back({e, a, q});
    }
    return out;
}

std::vector<TstEntry> tst_set(const Partition& mu, int r, int s, int t) {
    check_residue(r, s, "tst_set");
    check_residue(r, t, "tst_set");
    std::vector<TstEntry> out;
    for (auto [v, m] : mu.runs()) {
        if (radix(v, r).leading() != s) continue;
        for (long j = 1; j <= m; ++j)
            if (radix(j, r).leading() == t) out.push_back({v, j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DefectTriple> defect_triples(const Partition& mu, int r, int s) {
    check_residue(r, s, "defect_triples");
    std::vector<DefectTriple> out;
    for (auto [v, m] : mu.runs()) {
        if (radix(v, r).leading() != s) continue;
        for (const auto& da : defect_numbers(m, r).defect)
            if (radix(da.e, r).leading() == 1)  // one triple per parameter pair (a, q)
                out.push_back({v, da.a, da.q});
    }
    std::sort(out.begin(), out.end());
    return out;
}

DeltaMap delta_st(const Partition& mu, int r, int s, int t) {
    check_residue(r, s, "delta_st");
    check_residue(r, t, "delta_st");
    if (!mu.is_class_regular(r))
        throw std::invalid_argument("delta_st: " + mu.to_string() + " has a part divisible by " +
                                    std::to_string(r));
    DeltaMap out;
    out.mu = mu;
    out.glaisher_image = glaisher(mu, r);
    out.r = r;
    out.s = s;
    out.t = t;
    out.defect_side = defect_triples(mu, r, s);
    out.target_side = tst_set(out.glaisher_image, r, s, t);

    for (TstEntry src : tst_set(mu, r, s, t)) {
        long m = mu.multiplicity(src.part);
        auto rd = radix(src.occurrence, r);
        int a = rd.degree();
        long q = rd.quotient();
        long q_above = m;
        for (int j = 0; j <= a; ++j) q_above /= r;
        DeltaImage img;
        if (q == q_above) {
            // non-defect occurrence: j = t*r^a + h_{a+1}(m), lands on part i*r^a
            long scale = 1;
            for (int j = 0; j < a; ++j) scale *= r;
            img.to_defect = false;
            img.target = {static_cast<int>(src.part * scale), static_cast<long>(t)};
            img.triple = {};
        } else {
            img.to_defect = true;
            img.triple = {src.part, a, q};
            img.target = {};
        }
        out.entries.emplace_back(src, img);
    }
    return out;
}

AlphaBeta alpha_beta(int n, int r, int s) {
    check_residue(r, s, "alpha_beta");
    if (n < 0) throw std::invalid_argument("alpha_beta: n must be nonnegative");
    AlphaBeta out{0, 0, 0};
    auto C = generate_partitions(n, Filter::class_regular(r));
    for (const auto& mu : C)
        for (auto [v, m] : mu.runs())
            if (v % r == s) out.alpha += m;
    for (const auto& rho : generate_partitions(n, Filter::regular(r)))
        for (auto [v, m] : rho.runs())
            if (m >= s) ++out.beta;
    out.d_C = aggregate(C, r).defect;
    return out;
}

}  // namespace chartab
