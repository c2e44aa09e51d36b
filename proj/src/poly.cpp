#include "chartab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chartab {

Poly Poly::monomial(size_t deg, const Rat& coeff) {
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = coeff;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) c[k] -= o.c_[k];
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& f) const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= f;
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
    return v;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += c_[k].get_str();
        if (k >= 1) s += "*t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat lead = b.leading();
    for (size_t k = quot.size(); k-- > 0;) {
        Rat f = rem[k + static_cast<size_t>(b.degree())] / lead;
        if (f == 0) continue;
        quot[k] = f;
        for (size_t j = 0; j <= static_cast<size_t>(b.degree()); ++j)
            rem[k + j] -= f * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rat(1) / a.leading());
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(1), u1;
    Poly v0, v1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat f = Rat(1) / r0.leading();
    return {r0.scaled(f), u0.scaled(f), v0.scaled(f)};
}

}  // namespace chartab
