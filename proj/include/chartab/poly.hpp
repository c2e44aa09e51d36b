#pragma once

#include <utility>
#include <vector>

#include "chartab/numeric.hpp"

namespace chartab {

// Dense univariate polynomial over the rationals; trailing zeros are trimmed
// so degree() is exact (zero polynomial has degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
    static Poly monomial(size_t deg, const Rat& coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& f) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;

    std::string to_string() const;  // human-readable, variable "t"

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// quotient and remainder, deg(rem) < deg(divisor); divisor must be nonzero
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// monic gcd
Poly poly_gcd(Poly a, Poly b);

// g = u*a + v*b with g the monic gcd
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

}  // namespace chartab
