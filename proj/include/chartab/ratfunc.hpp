#pragma once

#include <string>

#include "chartab/poly.hpp"

namespace chartab {

// Quotient of polynomials in canonical form: reduced, monic denominator,
// zero stored as 0/1.  Equality is plain member comparison.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(Rat(1))) {}
    explicit RatFunc(Rat v) : num_(Poly::constant(std::move(v))), den_(Poly::constant(Rat(1))) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(Rat(1))) {}
    RatFunc(Poly num, Poly den);  // throws on zero denominator

    static RatFunc variable() { return RatFunc(Poly::monomial(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.degree() < 0; }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly as_polynomial() const;  // throws unless is_polynomial

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws on zero divisor
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }

    bool operator==(const RatFunc& o) const = default;

    Rat eval(const Rat& x) const;  // throws on a pole

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;

    void reduce();
};

}  // namespace chartab
