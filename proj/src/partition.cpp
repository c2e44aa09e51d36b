#include "chartab/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chartab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    finish_init();
}

Partition Partition::from_multiplicities(const std::vector<std::pair<int, long>>& mults) {
    std::map<int, long, std::greater<int>> by_part;
    for (auto [value, m] : mults) {
        if (value <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (m <= 0) throw std::invalid_argument("Partition: multiplicities must be positive");
        if (!by_part.emplace(value, m).second)
            throw std::invalid_argument("Partition: duplicate part value");
    }
    Partition p;
    for (auto [value, m] : by_part)
        p.parts_.insert(p.parts_.end(), static_cast<size_t>(m), value);
    p.finish_init();
    return p;
}

void Partition::finish_init() {
    n_ = 0;
    runs_.clear();
    for (int v : parts_) {
        n_ += v;
        if (!runs_.empty() && runs_.back().first == v)
            ++runs_.back().second;
        else
            runs_.emplace_back(v, 1);
    }
}

int Partition::multiplicity(int value) const {
    for (auto [v, m] : runs_) {
        if (v == value) return m;
        if (v < value) break;
    }
    return 0;
}

bool Partition::is_regular(int r) const {
    for (auto [v, m] : runs_)
        if (m >= r) return false;
    return true;
}

bool Partition::is_class_regular(int r) const {
    for (auto [v, m] : runs_)
        if (v % r == 0) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

Filter Filter::regular(int r) {
    if (r < 2) throw std::invalid_argument("Filter::regular: r must be at least 2");
    return {Kind::Regular, r};
}

Filter Filter::class_regular(int r) {
    if (r < 2) throw std::invalid_argument("Filter::class_regular: r must be at least 2");
    return {Kind::ClassRegular, r};
}

namespace {

void gen_rec(int remaining, int max_part, const Filter& f, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (f.kind == Filter::Kind::ClassRegular && p % f.r == 0) continue;
        int cap = remaining / p;
        if (f.kind == Filter::Kind::Regular) cap = std::min(cap, f.r - 1);
        // more copies first keeps the output reverse-lexicographic
        for (int c = cap; c >= 1; --c) {
            cur.insert(cur.end(), static_cast<size_t>(c), p);
            gen_rec(remaining - c * p, p - 1, f, cur, out);
            cur.resize(cur.size() - static_cast<size_t>(c));
        }
    }
}

}  // namespace

std::vector<Partition> generate_partitions(int n, Filter f) {
    if (n < 0) throw std::invalid_argument("generate_partitions: n must be nonnegative");
    if (f.kind != Filter::Kind::All && f.r < 2)
        throw std::invalid_argument("generate_partitions: filter needs r >= 2");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_rec(n, n == 0 ? 1 : n, f, cur, out);
    if (n == 0) {
        out.clear();
        out.push_back(Partition{});
    }
    return out;
}

namespace {

long defect_of_multiplicity(long m, int r) {
    long d = 0;
    for (long q = m / r; q > 0; q /= r) d += q;
    return d;
}

}  // namespace

PartitionStats stats(const Partition& mu, int r) {
    if (r < 2) throw std::invalid_argument("stats: r must be at least 2");
    PartitionStats st{1, 1, 1, 0};
    for (auto [v, m] : mu.runs()) {
        st.a *= int_pow(static_cast<long>(v), static_cast<unsigned long>(m));
        st.b *= factorial(static_cast<unsigned long>(m));
        st.defect += defect_of_multiplicity(m, r);
    }
    st.z = st.a * st.b;
    return st;
}

Aggregate aggregate(const std::vector<Partition>& set, int r) {
    Aggregate agg{1, 1, 0};
    for (const Partition& mu : set) {
        PartitionStats st = stats(mu, r);
        agg.a *= st.a;
        agg.b *= st.b;
        agg.defect += st.defect;
    }
    return agg;
}

int RadixDecomposition::degree() const {
    for (size_t j = 0; j < digits.size(); ++j)
        if (digits[j] != 0) return static_cast<int>(j);
    throw std::domain_error("RadixDecomposition::degree: undefined for m = 0");
}

int RadixDecomposition::leading() const { return digits[static_cast<size_t>(degree())]; }

long RadixDecomposition::digit_sum() const {
    long s = 0;
    for (int d : digits) s += d;
    return s;
}

long RadixDecomposition::quotient() const {
    int k = degree();
    long p = 1;
    for (int j = 0; j <= k; ++j) p *= r;
    return m / p;  // == floor(m / r^{k+1}) since the digits below k vanish
}

long RadixDecomposition::defect() const { return defect_of_multiplicity(m, r); }

long RadixDecomposition::q_at(int a) const {
    if (a < 0) throw std::invalid_argument("q_at: a must be nonnegative");
    long q = m;
    for (int j = 0; j < a && q > 0; ++j) q /= r;
    return q;
}

long RadixDecomposition::h_at(int a) const {
    long p = 1;
    for (int j = 0; j < a; ++j) p *= r;
    return q_at(a) * p;
}

RadixDecomposition radix(long m, int r) {
    if (m < 0) throw std::invalid_argument("radix: m must be nonnegative");
    if (r < 2) throw std::invalid_argument("radix: r must be at least 2");
    RadixDecomposition d;
    d.m = m;
    d.r = r;
    for (long v = m; v > 0; v /= r) d.digits.push_back(static_cast<int>(v % r));
    return d;
}

Partition glaisher(const Partition& mu, int r) {
    if (r < 2) throw std::invalid_argument("glaisher: r must be at least 2");
    if (!mu.is_class_regular(r))
        throw std::invalid_argument("glaisher: " + mu.to_string() + " has a part divisible by " +
                                    std::to_string(r));
    std::vector<std::pair<int, long>> mults;
    for (auto [v, m] : mu.runs()) {
        long scale = 1;
        for (long rest = m; rest > 0; rest /= r, scale *= r) {
            int digit = static_cast<int>(rest % r);
            if (digit != 0) mults.emplace_back(static_cast<int>(v * scale), digit);
        }
    }
    return Partition::from_multiplicities(mults);
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (mu.n() != lam.n())
        throw std::invalid_argument("dominance_leq: partitions must have equal size");
    long sum_mu = 0, sum_lam = 0;
    int len = std::max(mu.length(), lam.length());
    for (int i = 0; i < len; ++i) {
        sum_mu += i < mu.length() ? mu.part(i) : 0;
        sum_lam += i < lam.length() ? lam.part(i) : 0;
        if (sum_mu > sum_lam) return false;
    }
    return true;
}

}  // namespace chartab
