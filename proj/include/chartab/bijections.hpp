#pragma once

#include <utility>
#include <vector>

#include "chartab/partition.hpp"

namespace chartab {

// Classification of 1..m relative to the base-r expansion of m.  A number
// e with lowest nonzero digit at position a is non-defect when everything
// above that position agrees with m, i.e. floor(e/r^{a+1}) = floor(m/r^{a+1}).
struct DefectAssignment {
    long e;
    int a;   // digit position of the lowest nonzero digit of e
    long q;  // floor(e / r^{a+1})
    bool operator==(const DefectAssignment&) const = default;
};

struct DefectNumbers {
    long m = 0;
    int r = 2;
    std::vector<long> non_defect;           // ascending
    std::vector<DefectAssignment> defect;   // ascending in e
};

DefectNumbers defect_numbers(long m, int r);

// Occurrence-indexed part set: pairs (i, j) with 1 <= j <= m_i(mu) where
// the lowest nonzero base-r digits of i and j are s and t.
struct TstEntry {
    int part;
    long occurrence;
    bool operator==(const TstEntry&) const = default;
    auto operator<=>(const TstEntry&) const = default;
};

std::vector<TstEntry> tst_set(const Partition& mu, int r, int s, int t);

// Triple (i, a, q): part value i of mu together with a defect parameter of
// its multiplicity.
struct DefectTriple {
    int part;
    int a;
    long q;
    bool operator==(const DefectTriple&) const = default;
    auto operator<=>(const DefectTriple&) const = default;
};

std::vector<DefectTriple> defect_triples(const Partition& mu, int r, int s);

// The occurrence-set bijection for class-regular mu: each (i, j) in the
// T^(st) set of mu lands either on a defect triple of mu or on an entry of
// the T^(st) set of glaisher(mu, r).
struct DeltaImage {
    bool to_defect;
    DefectTriple triple;  // valid when to_defect
    TstEntry target;      // valid otherwise
    bool operator==(const DeltaImage&) const = default;
};

struct DeltaMap {
    Partition mu;
    Partition glaisher_image;
    int r, s, t;
    std::vector<std::pair<TstEntry, DeltaImage>> entries;  // one per T^(st)(mu) element
    std::vector<DefectTriple> defect_side;                 // the full defect-triple set of mu
    std::vector<TstEntry> target_side;                     // the full T^(st) set of the image
};

DeltaMap delta_st(const Partition& mu, int r, int s, int t);

// alpha: total multiplicity of parts congruent to s mod r over class-regular
// partitions of n; beta: number of part values with multiplicity >= s over
// regular partitions; their difference is the aggregate defect.
struct AlphaBeta {
    long alpha;
    long beta;
    long d_C;
};

AlphaBeta alpha_beta(int n, int r, int s);

// Truncated power series (exact rational coefficients, index = exponent).
struct SeriesCoefficients {
    std::vector<Rat> A;    // marks parts congruent to s mod r over class-regular partitions
    std::vector<Rat> B;    // marks multiplicities >= s over regular partitions
    std::vector<Rat> D;    // aggregate defect generating function
    std::vector<Rat> P_r;  // generating function of the regular partition count
};

SeriesCoefficients series_coefficients(int r, int s, int N);

}  // namespace chartab
