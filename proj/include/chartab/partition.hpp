#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chartab/numeric.hpp"

namespace chartab {

// Integer partition with parts stored weakly decreasing.  The run view
// (part value, multiplicity) is derived once at construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // pairs (i, m_i) with i the part value; any order, zero m_i forbidden
    static Partition from_multiplicities(const std::vector<std::pair<int, long>>& mults);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int idx) const { return parts_.at(static_cast<size_t>(idx)); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // runs are (value, multiplicity), values strictly decreasing
    const std::vector<std::pair<int, int>>& runs() const { return runs_; }
    int multiplicity(int value) const;

    bool is_regular(int r) const;        // every multiplicity < r
    bool is_class_regular(int r) const;  // no part divisible by r

    std::string to_string() const;  // e.g. "(3,1,1)"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // lexicographic on the part vector; see canonical_before for display order
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<std::pair<int, int>> runs_;
    int n_ = 0;

    void finish_init();
};

// Reverse-lexicographic, largest first: (n) comes first, (1^n) last.
// Linear extension of the dominance order.
inline bool canonical_before(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}

struct Filter {
    enum class Kind { All, Regular, ClassRegular };
    Kind kind = Kind::All;
    int r = 0;

    static Filter all() { return {Kind::All, 0}; }
    static Filter regular(int r);        // multiplicities < r
    static Filter class_regular(int r);  // no part divisible by r
    static Filter distinct() { return regular(2); }
    static Filter odd_parts() { return class_regular(2); }
};

// All partitions of n matching the filter, in canonical order.
std::vector<Partition> generate_partitions(int n, Filter f = Filter::all());

struct PartitionStats {
    Int z;        // centralizer order: prod i^{m_i} m_i!
    Int a;        // prod i^{m_i}
    Int b;        // prod m_i!
    long defect;  // sum over i,k>=1 of floor(m_i / r^k)
};

PartitionStats stats(const Partition& mu, int r);

struct Aggregate {
    Int a;
    Int b;
    long defect;
};

Aggregate aggregate(const std::vector<Partition>& set, int r);

// Base-r expansion in the power-series convention: degree() is the lowest
// nonzero digit position and leading() that digit.
struct RadixDecomposition {
    long m = 0;
    int r = 2;
    std::vector<int> digits;  // digits[j] is the coefficient of r^j

    int degree() const;   // k with m_k the lowest nonzero digit; throws for m = 0
    int leading() const;  // m_{degree()}
    long digit_sum() const;
    long quotient() const;      // q with m = leading()*r^k + q*r^{k+1}
    long defect() const;        // sum_{a>=1} floor(m / r^a)
    long q_at(int a) const;     // floor(m / r^a)
    long h_at(int a) const;     // q_at(a) * r^a
};

RadixDecomposition radix(long m, int r);

// Multiplicity-rewriting bijection from class-regular onto regular
// partitions: each m_i is expanded base r and digit m_{ij} becomes the
// multiplicity of part i*r^j.
Partition glaisher(const Partition& mu, int r);

// mu <= lam in dominance order (partial sums); requires |mu| == |lam|
bool dominance_leq(const Partition& mu, const Partition& lam);

}  // namespace chartab
