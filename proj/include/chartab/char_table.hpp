#pragma once

#include <vector>

#include "chartab/exact_linalg.hpp"
#include "chartab/partition.hpp"

namespace chartab {

// Irreducible character of the symmetric group evaluated on a class,
// computed by border-strip removal over beta numbers.
Int chi(const Partition& lambda, const Partition& mu);

// Number of ordered set partitions (B_1, ..., B_k) of the parts of mu with
// block sums lambda_1, ..., lambda_k; the character of the permutation module
// M^lambda.
Int xi(const Partition& lambda, const Partition& mu);

struct CharTable {
    std::vector<Partition> row_labels;
    std::vector<Partition> col_labels;
    IntMatrix values;
};

struct Tables {
    int n = 0;
    int r = 2;
    std::vector<Partition> all;             // canonical order
    std::vector<Partition> regular;         // multiplicities < r
    std::vector<Partition> class_regular;   // no part divisible by r
    std::vector<Partition> singular;        // complement of regular
    std::vector<Partition> class_singular;  // complement of class-regular
    CharTable X;     // all irreducibles on all classes
    CharTable X_RC;  // regular rows, class-regular columns
    CharTable X_SS;  // singular rows, class-singular columns
    CharTable Y_CC;  // permutation characters on the class-regular square
};

Tables build_tables(int n, int r);

// Determinant identities: |det X_RC| is the product of the part-products
// a_mu over class-regular mu, |det X_SS| the product of b_mu over
// class-singular mu, and the latter re-derives through the complementary
// minor of the inverse character table.
struct DetReport {
    Int det_X;
    Int det_RC;
    Int a_C;
    Int det_SS;
    Int b_Csing;
    Rat jacobi_minor;     // det of the complementary block of X^{-1}
    Rat jacobi_expected;  // sign * det_SS / det_X
    bool rc_matches = false;
    bool ss_matches = false;
    bool jacobi_matches = false;
    bool ok() const { return rc_matches && ss_matches && jacobi_matches; }
};

DetReport verify_det_theorems(int n, int r);

// D = Y_CC * X_RC^{-1}; integral with |det D| = r^{d_C}, and the determinant
// of the associated symmetrized matrix a_C b_C / det(X_RC)^2 equals the same
// power.
struct CartanReport {
    RatMatrix decomposition;
    bool integral = false;
    Int det_D_abs;
    Int r_power;  // r^{d_C}
    Rat cartan_det;
    bool det_matches = false;
    bool cartan_matches = false;
    bool ok() const { return integral && det_matches && cartan_matches; }
};

CartanReport decomposition_and_cartan(int n, int r);

// Smith normal form of X_RC at r = p prime versus the diagonal form of the
// p'-parts of the multiplicity factorials b_mu.
struct SnfTheoremReport {
    std::vector<Int> lhs;
    std::vector<Int> rhs;
    bool matches = false;
};

SnfTheoremReport verify_snf_theorem(int n, int p);

// For any p > n the same statement without stripping: S(X) against the b_mu
// of all partitions.
SnfTheoremReport verify_snf_full(int n);

// Open question for composite r: compare S(X_RC) and the diagonal form of
// the b_mu with all prime factors of r removed on both sides.
struct PiPrimeScan {
    int n = 0;
    int r = 0;
    std::vector<Int> pi;  // prime factors of r
    std::vector<Int> lhs;
    std::vector<Int> rhs;
    bool match = false;
};

PiPrimeScan scan_pi_prime_conjecture(int n, int r);

// Row and column orthogonality of the full table over the rationals.
bool verify_orthogonality(int n);

}  // namespace chartab
