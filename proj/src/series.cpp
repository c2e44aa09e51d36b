#include <stdexcept>

#include "chartab/bijections.hpp"

namespace chartab {

namespace {

using Series = std::vector<Rat>;  // index = exponent, truncated past N

// in place multiply by 1/(1 - q^i)
void mul_inv_one_minus(Series& f, int i) {
    for (size_t k = static_cast<size_t>(i); k < f.size(); ++k) f[k] += f[k - i];
}

// in place multiply by (1 - q^i)
void mul_one_minus(Series& f, int i) {
    for (size_t k = f.size(); k-- > static_cast<size_t>(i);) f[k] -= f[k - i];
}

Series mul_trunc(const Series& f, const Series& g) {
    Series h(f.size(), Rat(0));
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; i + j < g.size(); ++j) h[i + j] += f[i] * g[j];
    }
    return h;
}

}  // namespace

SeriesCoefficients series_coefficients(int r, int s, int N) {
    if (r < 2) throw std::invalid_argument("series_coefficients: r must be at least 2");
    if (s < 1 || s > r - 1)
        throw std::invalid_argument("series_coefficients: residue must lie in 1..r-1");
    if (N < 0) throw std::invalid_argument("series_coefficients: N must be nonnegative");

    const size_t len = static_cast<size_t>(N) + 1;

    // P_r(q) = prod_{i>=1} (1-q^i)^{-1} * prod_{i>=1} (1-q^{ri})
    Series p_r(len, Rat(0));
    p_r[0] = 1;
    for (int i = 1; i <= N; ++i) mul_inv_one_minus(p_r, i);
    for (int i = 1; i * r <= N; ++i) mul_one_minus(p_r, i * r);

    // sum over parts congruent to s: q^v/(1-q^v) summed over v = s, s+r, ...
    Series suma(len, Rat(0));
    for (int v = s; v <= N; v += r)
        for (int e = v; e <= N; e += v) suma[static_cast<size_t>(e)] += 1;

    // sum_j (q^{js} - q^{jr})/(1 - q^{jr})
    Series sumb(len, Rat(0));
    for (int j = 1; j * s <= N || j * r <= N; ++j) {
        for (long e = static_cast<long>(j) * s; e <= N; e += static_cast<long>(j) * r)
            sumb[static_cast<size_t>(e)] += 1;
        for (long e = static_cast<long>(j) * r; e <= N; e += static_cast<long>(j) * r)
            sumb[static_cast<size_t>(e)] -= 1;
    }

    // sum_j q^{jr}/(1 - q^{jr})
    Series sumd(len, Rat(0));
    for (int j = 1; j * r <= N; ++j)
        for (long e = static_cast<long>(j) * r; e <= N; e += static_cast<long>(j) * r)
            sumd[static_cast<size_t>(e)] += 1;

    SeriesCoefficients out;
    out.P_r = p_r;
    out.A = mul_trunc(p_r, suma);
    out.B = mul_trunc(p_r, sumb);
    out.D = mul_trunc(p_r, sumd);
    return out;
}

}  // namespace chartab
