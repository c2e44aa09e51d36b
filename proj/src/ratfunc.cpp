#include "chartab/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace chartab {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.degree() < 0) throw std::invalid_argument("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.degree() < 0) {
        den_ = Poly::constant(Rat(1));
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rat lead = den_.leading();
    if (lead != 1) {
        num_ = num_.scaled(Rat(1) / lead);
        den_ = den_.scaled(Rat(1) / lead);
    }
}

Poly RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
    return num_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rat RatFunc::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("RatFunc: pole at the evaluation point");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace chartab
