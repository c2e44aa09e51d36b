#include "chartab/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace chartab {

Int det(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix must be square");
    const size_t n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(a(piv, j), a(k, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a(i, j) = divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return negate ? Int(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

namespace {

// quotient rounded so the remainder satisfies 2|rem| <= |b|
Int round_div(const Int& a, const Int& b) {
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(rem) > abs(b)) q += 1;  // floor remainder has the sign of b
    return q;
}

struct SnfWork {
    IntMatrix a;
    bool track;
    IntMatrix u, v;

    void row_swap(size_t i, size_t j) {
        for (size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        if (track)
            for (size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void col_swap(size_t i, size_t j) {
        for (size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        if (track)
            for (size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    void row_addmul(size_t dst, size_t src, const Int& f) {
        for (size_t c = 0; c < a.cols(); ++c) a(dst, c) += f * a(src, c);
        if (track)
            for (size_t c = 0; c < u.cols(); ++c) u(dst, c) += f * u(src, c);
    }
    void col_addmul(size_t dst, size_t src, const Int& f) {
        for (size_t r = 0; r < a.rows(); ++r) a(r, dst) += f * a(r, src);
        if (track)
            for (size_t r = 0; r < v.rows(); ++r) v(r, dst) += f * v(r, src);
    }
    void row_negate(size_t i) {
        for (size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        if (track)
            for (size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

}  // namespace

SnfResult snf(IntMatrix a_in, bool with_multipliers) {
    SnfWork w{std::move(a_in), with_multipliers, {}, {}};
    const size_t rows = w.a.rows(), cols = w.a.cols();
    if (with_multipliers) {
        w.u = IntMatrix::identity(rows);
        w.v = IntMatrix::identity(cols);
    }
    const size_t steps = std::min(rows, cols);

    for (size_t t = 0; t < steps; ++t) {
        for (;;) {
            // minimal-magnitude nonzero pivot in the trailing block
            size_t pi = rows, pj = cols;
            Int best;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j) {
                    if (w.a(i, j) == 0) continue;
                    Int m = abs(w.a(i, j));
                    if (pi == rows || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) goto done;  // trailing block is zero
            if (pi != t) w.row_swap(pi, t);
            if (pj != t) w.col_swap(pj, t);

            bool reduced = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (w.a(i, t) == 0) continue;
                Int q = round_div(w.a(i, t), w.a(t, t));
                if (q != 0) w.row_addmul(i, t, -q);
                if (w.a(i, t) != 0) reduced = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (w.a(t, j) == 0) continue;
                Int q = round_div(w.a(t, j), w.a(t, t));
                if (q != 0) w.col_addmul(j, t, -q);
                if (w.a(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;  // smaller remainders became new pivot candidates

            // pivot must divide the whole trailing block
            bool divides_all = true;
            for (size_t i = t + 1; i < rows && divides_all; ++i)
                for (size_t j = t + 1; j < cols && divides_all; ++j)
                    if (!divides(w.a(t, t), w.a(i, j))) {
                        w.row_addmul(t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (w.a(t, t) < 0) w.row_negate(t);
    }
done:;

    SnfResult res;
    res.diag.resize(steps);
    for (size_t t = 0; t < steps; ++t) res.diag[t] = w.a(t, t);
    res.has_multipliers = with_multipliers;
    if (with_multipliers) {
        res.u = std::move(w.u);
        res.v = std::move(w.v);
    }
    return res;
}

std::vector<Int> snf_diag(std::vector<Int> values) {
    for (const Int& v : values)
        if (v < 1) throw std::invalid_argument("snf_diag: entries must be positive");
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < values.size(); ++i)
            for (size_t j = i + 1; j < values.size(); ++j) {
                Int g = gcd(values[i], values[j]);
                if (g == values[i]) continue;
                values[j] = divexact(values[i], g) * values[j];
                values[i] = g;
                changed = true;
            }
    }
    return values;
}

std::vector<Int> snf_chain_product(std::vector<Int> a, std::vector<Int> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("snf_chain_product: chains must have equal length");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Int> prod(a.size());
    for (size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
    return snf_diag(std::move(prod));
}

Int coprime_part(Int m, const std::vector<Int>& primes) {
    if (m < 1) throw std::invalid_argument("coprime_part: m must be positive");
    for (const Int& p : primes) {
        if (p < 2) throw std::invalid_argument("coprime_part: primes must be at least 2");
        while (divides(p, m)) m = divexact(m, p);
    }
    return m;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

bool is_integral(const RatMatrix& a) {
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (a(i, j).get_den() != 1) return false;
    return true;
}

IntMatrix to_integral(const RatMatrix& a) {
    if (!is_integral(a)) throw std::domain_error("to_integral: matrix has nontrivial denominators");
    IntMatrix m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_num();
    return m;
}

RatMatrix inverse(RatMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix must be square");
    const size_t n = a.rows();
    RatMatrix inv = RatMatrix::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: matrix is singular");
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        Rat d = a(k, k);
        for (size_t j = 0; j < n; ++j) {
            a(k, j) /= d;
            inv(k, j) /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RatMatrix solve_right(const IntMatrix& y, const IntMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("solve_right: x must be square");
    if (y.cols() != x.rows()) throw std::invalid_argument("solve_right: dimension mismatch");
    return to_rational(y) * inverse(to_rational(x));
}

}  // namespace chartab
