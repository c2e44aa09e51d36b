#include "chartab/char_table.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace chartab {

namespace {

// beta numbers lambda_i + (L-1-i), strictly decreasing
std::vector<int> beta_set(const std::vector<int>& parts) {
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < len; ++i) beta[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)] + (len - 1 - i);
    return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int t = 0; t < len; ++t) {
        int p = beta[static_cast<size_t>(t)] - (len - 1 - t);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

// memo is shared across one column (fixed mu); keyed by the shape still to
// be peeled and how much of mu has been consumed
using ChiMemo = std::map<std::pair<std::vector<int>, size_t>, Int>;

Int chi_rec(const std::vector<int>& lam, const std::vector<int>& mu, size_t k, ChiMemo& memo) {
    if (k == mu.size()) return 1;
    auto key = std::make_pair(lam, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int b = mu[k];
    const std::vector<int> beta = beta_set(lam);
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - b;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == target) {
                occupied = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> moved = beta;
        moved[i] = target;
        Int term = chi_rec(partition_from_beta(std::move(moved)), mu, k + 1, memo);
        if (between % 2 != 0) term = -term;
        total += term;
    }
    return memo.emplace(std::move(key), std::move(total)).first->second;
}

// Full table for one n, built once and shared; canonical order on both axes.
const CharTable& full_char_table(int n) {
    static std::mutex guard;
    static std::map<int, std::unique_ptr<const CharTable>> cache;
    std::scoped_lock lock(guard);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;

    auto table = std::make_unique<CharTable>();
    table->row_labels = generate_partitions(n);
    table->col_labels = table->row_labels;
    const size_t count = table->row_labels.size();
    table->values = IntMatrix(count, count);
    for (size_t c = 0; c < count; ++c) {
        ChiMemo memo;
        const auto& mu_parts = table->col_labels[c].parts();
        for (size_t row = 0; row < count; ++row)
            table->values(row, c) = chi_rec(table->row_labels[row].parts(), mu_parts, 0, memo);
    }
    const CharTable& ref = *table;
    cache.emplace(n, std::move(table));
    return ref;
}

bool is_prime_int(int m) {
    if (m < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::vector<Int> prime_factors_of(int r) {
    std::vector<Int> out;
    int m = r;
    for (int d = 2; d <= m; ++d) {
        if (m % d != 0) continue;
        out.emplace_back(d);
        while (m % d == 0) m /= d;
    }
    return out;
}

}  // namespace

Int chi(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("chi: |lambda| != |mu|");
    ChiMemo memo;
    return chi_rec(lambda.parts(), mu.parts(), 0, memo);
}

Int xi(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("xi: |lambda| != |mu|");
    const auto& cyc = mu.parts();
    const int len = static_cast<int>(cyc.size());
    if (len > 20) throw std::domain_error("xi: too many parts of mu for the subset walk");

    const std::uint32_t full = (len == 0) ? 0u : ((1u << len) - 1u);
    std::vector<int> mask_sum(size_t{1} << len, 0);
    for (std::uint32_t m = 1; m <= full && full != 0; ++m) {
        const int low = std::countr_zero(m);
        mask_sum[m] = mask_sum[m & (m - 1)] + cyc[static_cast<size_t>(low)];
    }

    // dp[mask] = ways to fill the blocks seen so far using exactly mask;
    // prefix sums are strictly increasing, so each mask is written at most
    // once and the vector can be updated in place
    std::vector<Int> dp(size_t{1} << len);
    dp[0] = 1;
    int prefix = 0;
    for (int block : lambda.parts()) {
        prefix += block;
        for (std::uint32_t m = full; m != 0; --m) {
            if (mask_sum[m] != prefix) continue;
            Int acc = 0;
            for (std::uint32_t sub = m; sub != 0; sub = (sub - 1) & m)
                if (mask_sum[sub] == block) acc += dp[m ^ sub];
            dp[m] = std::move(acc);
        }
    }
    return dp[full];
}

Tables build_tables(int n, int r) {
    if (n < 0) throw std::invalid_argument("build_tables: n must be nonnegative");
    if (r < 2) throw std::invalid_argument("build_tables: r must be at least 2");

    Tables t;
    t.n = n;
    t.r = r;
    t.X = full_char_table(n);
    t.all = t.X.row_labels;

    std::vector<size_t> reg_idx, sing_idx, creg_idx, csing_idx;
    for (size_t i = 0; i < t.all.size(); ++i) {
        const Partition& p = t.all[i];
        if (p.is_regular(r)) {
            t.regular.push_back(p);
            reg_idx.push_back(i);
        } else {
            t.singular.push_back(p);
            sing_idx.push_back(i);
        }
        if (p.is_class_regular(r)) {
            t.class_regular.push_back(p);
            creg_idx.push_back(i);
        } else {
            t.class_singular.push_back(p);
            csing_idx.push_back(i);
        }
    }

    t.X_RC.row_labels = t.regular;
    t.X_RC.col_labels = t.class_regular;
    t.X_RC.values = t.X.values.submatrix(reg_idx, creg_idx);

    t.X_SS.row_labels = t.singular;
    t.X_SS.col_labels = t.class_singular;
    t.X_SS.values = t.X.values.submatrix(sing_idx, csing_idx);

    const size_t c = t.class_regular.size();
    t.Y_CC.row_labels = t.class_regular;
    t.Y_CC.col_labels = t.class_regular;
    t.Y_CC.values = IntMatrix(c, c);
    for (size_t i = 0; i < c; ++i)
        for (size_t j = 0; j < c; ++j)
            t.Y_CC.values(i, j) = xi(t.class_regular[i], t.class_regular[j]);

    return t;
}

DetReport verify_det_theorems(int n, int r) {
    const Tables t = build_tables(n, r);
    DetReport rep;
    rep.det_X = det(t.X.values);
    rep.det_RC = det(t.X_RC.values);
    rep.det_SS = det(t.X_SS.values);

    rep.a_C = aggregate(t.class_regular, r).a;
    rep.b_Csing = 1;
    for (const Partition& m : t.class_singular) rep.b_Csing *= stats(m, r).b;
    rep.rc_matches = abs(rep.det_RC) == rep.a_C;
    rep.ss_matches = abs(rep.det_SS) == rep.b_Csing;

    // X^{-1} has (class, shape) entry chi^lambda(mu) / z_mu by row
    // orthogonality; the block on (class-regular, regular) indices is the
    // complementary minor of X_SS inside X
    const size_t count = t.all.size();
    RatMatrix inv(count, count);
    std::vector<size_t> reg_idx, sing_idx, creg_idx, csing_idx;
    for (size_t i = 0; i < count; ++i) {
        (t.all[i].is_regular(r) ? reg_idx : sing_idx).push_back(i);
        (t.all[i].is_class_regular(r) ? creg_idx : csing_idx).push_back(i);
    }
    for (size_t i = 0; i < count; ++i) {
        const Rat zi(stats(t.all[i], r).z);
        for (size_t j = 0; j < count; ++j) inv(i, j) = Rat(t.X.values(j, i)) / zi;
    }
    const RatMatrix block = inv.submatrix(creg_idx, reg_idx);
    rep.jacobi_minor = det_field(block);

    long sign_sum = 0;
    for (size_t i : sing_idx) sign_sum += static_cast<long>(i);
    for (size_t j : csing_idx) sign_sum += static_cast<long>(j);
    rep.jacobi_expected = Rat(rep.det_SS) / Rat(rep.det_X);
    if (sign_sum % 2 != 0) rep.jacobi_expected = -rep.jacobi_expected;
    rep.jacobi_matches = rep.jacobi_minor == rep.jacobi_expected;
    return rep;
}

CartanReport decomposition_and_cartan(int n, int r) {
    const Tables t = build_tables(n, r);
    CartanReport rep;
    rep.decomposition = solve_right(t.Y_CC.values, t.X_RC.values);
    rep.integral = is_integral(rep.decomposition);

    const Aggregate agg = aggregate(t.class_regular, r);
    rep.r_power = int_pow(Int(r), static_cast<unsigned long>(agg.defect));
    if (rep.integral) {
        rep.det_D_abs = abs(det(to_integral(rep.decomposition)));
        rep.det_matches = rep.det_D_abs == rep.r_power;
    }

    const Int det_rc = det(t.X_RC.values);
    rep.cartan_det = Rat(agg.a * agg.b) / Rat(det_rc * det_rc);
    rep.cartan_matches = rep.cartan_det == Rat(rep.r_power);
    return rep;
}

SnfTheoremReport verify_snf_theorem(int n, int p) {
    if (!is_prime_int(p)) throw std::invalid_argument("verify_snf_theorem: p must be prime");
    const Tables t = build_tables(n, p);
    SnfTheoremReport rep;
    rep.lhs = snf(t.X_RC.values).diag;
    std::vector<Int> stripped;
    stripped.reserve(t.class_regular.size());
    const std::vector<Int> only_p{Int(p)};
    for (const Partition& m : t.class_regular) stripped.push_back(coprime_part(stats(m, p).b, only_p));
    rep.rhs = snf_diag(std::move(stripped));
    rep.matches = rep.lhs == rep.rhs;
    return rep;
}

SnfTheoremReport verify_snf_full(int n) {
    const CharTable& table = full_char_table(n);
    SnfTheoremReport rep;
    rep.lhs = snf(table.values).diag;
    std::vector<Int> bs;
    bs.reserve(table.col_labels.size());
    for (const Partition& m : table.col_labels) bs.push_back(stats(m, 2).b);
    rep.rhs = snf_diag(std::move(bs));
    rep.matches = rep.lhs == rep.rhs;
    return rep;
}

PiPrimeScan scan_pi_prime_conjecture(int n, int r) {
    if (r < 4 || is_prime_int(r)) throw std::invalid_argument("scan_pi_prime_conjecture: r must be composite");
    PiPrimeScan s;
    s.n = n;
    s.r = r;
    s.pi = prime_factors_of(r);

    const Tables t = build_tables(n, r);
    std::vector<Int> lhs;
    for (const Int& d : snf(t.X_RC.values).diag) lhs.push_back(coprime_part(d, s.pi));
    s.lhs = snf_diag(std::move(lhs));

    std::vector<Int> rhs;
    for (const Partition& m : t.class_regular) rhs.push_back(coprime_part(stats(m, r).b, s.pi));
    s.rhs = snf_diag(std::move(rhs));

    s.match = s.lhs == s.rhs;
    return s;
}

bool verify_orthogonality(int n) {
    const CharTable& table = full_char_table(n);
    const size_t count = table.row_labels.size();
    std::vector<Int> z;
    z.reserve(count);
    for (const Partition& m : table.col_labels) z.push_back(stats(m, 2).z);

    // rows: sum_mu chi^a(mu) chi^b(mu) / z_mu = [a == b]
    for (size_t a = 0; a < count; ++a)
        for (size_t b = a; b < count; ++b) {
            Rat acc(0);
            for (size_t m = 0; m < count; ++m)
                acc += Rat(table.values(a, m) * table.values(b, m)) / Rat(z[m]);
            if (acc != (a == b ? Rat(1) : Rat(0))) return false;
        }

    // columns: sum_lambda chi^lambda(mu) chi^lambda(nu) = z_mu [mu == nu]
    for (size_t m = 0; m < count; ++m)
        for (size_t v = m; v < count; ++v) {
            Int acc(0);
            for (size_t a = 0; a < count; ++a) acc += table.values(a, m) * table.values(a, v);
            if (acc != (m == v ? z[m] : Int(0))) return false;
        }
    return true;
}

}  // namespace chartab
