#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chartab/partition.hpp"
#include "chartab/poly.hpp"

namespace chartab {

// Q(omega) for omega a primitive r-th root of unity, represented as
// Q[x] modulo the r-th cyclotomic polynomial.
class CycloField {
public:
    explicit CycloField(int r);
    int r() const { return r_; }
    int degree() const { return modulus_.degree(); }
    const Poly& modulus() const { return modulus_; }

private:
    int r_;
    Poly modulus_;
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

CycloFieldPtr make_cyclotomic_field(int r);

// the r-th cyclotomic polynomial
Poly cyclotomic_polynomial(int r);

class CycloElem {
public:
    CycloElem() = default;  // field-free zero, combinable with any element

    CycloElem(CycloFieldPtr field, Poly value);  // value is reduced mod the modulus

    static CycloElem from_rational(const CycloFieldPtr& field, const Rat& v);
    static CycloElem omega(const CycloFieldPtr& field);

    const CycloFieldPtr& field() const { return field_; }
    const Poly& value() const { return value_; }

    bool is_zero() const { return value_.is_zero(); }
    bool is_rational() const { return value_.degree() <= 0; }
    Rat to_rational() const;  // throws unless is_rational

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator/(const CycloElem& o) const;
    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
    CycloElem inverse() const;  // throws on zero

    bool operator==(const CycloElem& o) const;

    std::string to_string() const;

private:
    CycloFieldPtr field_;  // null only for the default zero
    Poly value_;

    static const CycloFieldPtr& common_field(const CycloElem& a, const CycloElem& b);
};

CycloElem cyclo_pow(CycloElem base, long e);  // negative e inverts first

// z_mu evaluated at omega: all summands 1/(1-omega^{part}) must be defined,
// so every part must be prime to r.
CycloElem z_at_omega(const Partition& mu, const CycloFieldPtr& field);

// prod over part values i of (1-omega)(1-omega^2)...(1-omega^{m_i});
// vanishes exactly when some multiplicity reaches r.
CycloElem b_at_omega(const Partition& lam, const CycloFieldPtr& field);

// The two cyclotomic products over all class-regular mu and regular lam of
// fixed n, tracked as exponent vectors of the factors (1 - omega^s).
struct ProductSide {
    CycloFieldPtr field;
    std::vector<long> alpha_exp;  // exponent of (1-omega^s) in 1/A_C, index s-1
    std::vector<long> beta_exp;   // exponent of (1-omega^s) in 1/B_R, index s-1
    CycloElem a_side;             // A_C(omega)
    CycloElem b_side;             // B_R(omega)
    CycloElem ratio;              // B_R / A_C
    CycloElem product;            // prod z_mu(omega) * prod b_lam(omega)
};

ProductSide product_side(int n, int r);

}  // namespace chartab
