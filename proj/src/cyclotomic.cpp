#include "chartab/cyclotomic.hpp"

#include <stdexcept>

namespace chartab {

Poly cyclotomic_polynomial(int r) {
    if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be positive");
    // x^r - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<Poly> phi(static_cast<size_t>(r) + 1);
    for (int d = 1; d <= r; ++d) {
        if (r % d != 0) continue;
        Poly num = Poly::monomial(static_cast<size_t>(d)) - Poly::constant(1);
        for (int e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto [q, rem] = divmod(num, phi[static_cast<size_t>(e)]);
            if (!rem.is_zero())
                throw std::logic_error("cyclotomic_polynomial: non-exact division");
            num = std::move(q);
        }
        phi[static_cast<size_t>(d)] = std::move(num);
    }
    return phi[static_cast<size_t>(r)];
}

CycloField::CycloField(int r) : r_(r) {
    if (r < 2) throw std::invalid_argument("CycloField: r must be at least 2");
    modulus_ = cyclotomic_polynomial(r);
}

CycloFieldPtr make_cyclotomic_field(int r) { return std::make_shared<CycloField>(r); }

CycloElem::CycloElem(CycloFieldPtr field, Poly value) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("CycloElem: null field");
    value_ = divmod(value, field_->modulus()).second;
}

CycloElem CycloElem::from_rational(const CycloFieldPtr& field, const Rat& v) {
    return CycloElem(field, Poly::constant(v));
}

CycloElem CycloElem::omega(const CycloFieldPtr& field) {
    return CycloElem(field, Poly::monomial(1));
}

Rat CycloElem::to_rational() const {
    if (!is_rational()) throw std::domain_error("CycloElem: not a rational value");
    return value_.coeff(0);
}

const CycloFieldPtr& CycloElem::common_field(const CycloElem& a, const CycloElem& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    if (a.field_ != b.field_ && a.field_->r() != b.field_->r())
        throw std::invalid_argument("CycloElem: elements from different fields");
    return a.field_;
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    const CycloFieldPtr& f = common_field(*this, o);
    if (!f) return CycloElem();
    return CycloElem(f, value_ + o.value_);
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    const CycloFieldPtr& f = common_field(*this, o);
    if (!f) return CycloElem();
    return CycloElem(f, value_ - o.value_);
}

CycloElem CycloElem::operator-() const {
    if (!field_) return CycloElem();
    return CycloElem(field_, -value_);
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    const CycloFieldPtr& f = common_field(*this, o);
    if (!f) return CycloElem();
    return CycloElem(f, value_ * o.value_);
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElem: inverse of zero");
    auto eg = poly_ext_gcd(value_, field_->modulus());
    if (eg.g.degree() != 0)
        throw std::logic_error("CycloElem: modulus not coprime to element");
    return CycloElem(field_, eg.u.scaled(Rat(1) / eg.g.coeff(0)));
}

CycloElem CycloElem::operator/(const CycloElem& o) const {
    if (o.is_zero()) throw std::domain_error("CycloElem: division by zero");
    if (is_zero()) return *this;
    return *this * o.inverse();
}

bool CycloElem::operator==(const CycloElem& o) const {
    if (!field_ || !o.field_) return value_ == o.value_;  // a field-free side is zero
    common_field(*this, o);
    return value_ == o.value_;
}

std::string CycloElem::to_string() const { return value_.to_string(); }

CycloElem cyclo_pow(CycloElem base, long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    if (!base.field()) return CycloElem();
    CycloElem acc = CycloElem::from_rational(base.field(), 1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycloElem z_at_omega(const Partition& mu, const CycloFieldPtr& field) {
    const int r = field->r();
    if (!mu.is_class_regular(r))
        throw std::invalid_argument("z_at_omega: " + mu.to_string() +
                                    " has a part divisible by " + std::to_string(r));
    CycloElem omega = CycloElem::omega(field);
    CycloElem one = CycloElem::from_rational(field, 1);
    CycloElem val = CycloElem::from_rational(field, Rat(stats(mu, r).z));
    for (int part : mu.parts()) val = val / (one - cyclo_pow(omega, part));
    return val;
}

CycloElem b_at_omega(const Partition& lam, const CycloFieldPtr& field) {
    CycloElem omega = CycloElem::omega(field);
    CycloElem one = CycloElem::from_rational(field, 1);
    CycloElem val = one;
    for (auto [v, m] : lam.runs())
        for (int k = 1; k <= m; ++k) val = val * (one - cyclo_pow(omega, k));
    return val;
}

ProductSide product_side(int n, int r) {
    if (n < 0) throw std::invalid_argument("product_side: n must be nonnegative");
    ProductSide out;
    out.field = make_cyclotomic_field(r);
    out.alpha_exp.assign(static_cast<size_t>(r) - 1, 0);
    out.beta_exp.assign(static_cast<size_t>(r) - 1, 0);

    auto C = generate_partitions(n, Filter::class_regular(r));
    auto R = generate_partitions(n, Filter::regular(r));

    // 1/A_C = prod over mu in C, parts i of (1 - omega^i)^{m_i}; i mod r indexes the factor
    for (const auto& mu : C)
        for (auto [v, m] : mu.runs()) out.alpha_exp[static_cast<size_t>(v % r) - 1] += m;
    // 1/B_R = prod over lam in R of b_lam(omega); multiplicity m contributes one
    // factor (1 - omega^k) for each k = 1..m
    for (const auto& lam : R)
        for (auto [v, m] : lam.runs())
            for (int k = 1; k <= m; ++k) ++out.beta_exp[static_cast<size_t>(k) - 1];

    CycloElem omega = CycloElem::omega(out.field);
    CycloElem one = CycloElem::from_rational(out.field, 1);
    auto factor_pow = [&](int s, long e) {
        return cyclo_pow(one - cyclo_pow(omega, s), e);
    };

    out.a_side = one;
    out.b_side = one;
    out.ratio = one;
    for (int s = 1; s < r; ++s) {
        out.a_side = out.a_side * factor_pow(s, -out.alpha_exp[static_cast<size_t>(s) - 1]);
        out.b_side = out.b_side * factor_pow(s, -out.beta_exp[static_cast<size_t>(s) - 1]);
        out.ratio = out.ratio * factor_pow(s, out.alpha_exp[static_cast<size_t>(s) - 1] -
                                                  out.beta_exp[static_cast<size_t>(s) - 1]);
    }

    Aggregate agg = aggregate(C, r);
    out.product = CycloElem::from_rational(out.field, Rat(agg.a * agg.b));
    for (int s = 1; s < r; ++s)
        out.product = out.product * factor_pow(s, out.beta_exp[static_cast<size_t>(s) - 1] -
                                                      out.alpha_exp[static_cast<size_t>(s) - 1]);
    return out;
}

}  // namespace chartab
