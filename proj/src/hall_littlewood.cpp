#include "chartab/hall_littlewood.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "chartab/char_table.hpp"

namespace chartab {

namespace {

Poly one_minus_t_pow(int k) {
    std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
    c.front() = 1;
    c.back() += -1;  // k = 0 collapses to the zero polynomial
    return Poly(std::move(c));
}

Poly prod_one_minus(const Partition& mu) {
    Poly out = Poly::constant(Rat(1));
    for (int p : mu.parts()) out = out * one_minus_t_pow(p);
    return out;
}

// z_mu(t) = z_mu / prod_i (1 - t^{mu_i})
RatFunc z_ratfunc(const Partition& mu) {
    return RatFunc(Poly::constant(Rat(stats(mu, 2).z)), prod_one_minus(mu));
}

RatFunc inner(const std::vector<RatFunc>& f, const std::vector<RatFunc>& g,
              const std::vector<RatFunc>& weight) {
    RatFunc acc;
    for (size_t i = 0; i < weight.size(); ++i) {
        if (f[i].is_zero() || g[i].is_zero()) continue;
        acc += f[i] * g[i] * weight[i];
    }
    return acc;
}

}  // namespace

RatMatrix monomial_in_p(int n) {
    const auto labels = generate_partitions(n);
    const size_t count = labels.size();
    RatMatrix transitions(count, count);
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) transitions(i, j) = Rat(xi(labels[j], labels[i]));
    return inverse(transitions);
}

Poly b_poly(const Partition& lam) {
    Poly out = Poly::constant(Rat(1));
    for (const auto& run : lam.runs())
        for (int k = 1; k <= run.second; ++k) out = out * one_minus_t_pow(k);
    return out;
}

const HallLittlewoodBasis& hall_littlewood(int n) {
    static std::mutex guard;
    static std::map<int, std::unique_ptr<const HallLittlewoodBasis>> cache;
    std::scoped_lock lock(guard);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;

    auto basis = std::make_unique<HallLittlewoodBasis>();
    basis->n = n;
    basis->labels = generate_partitions(n);
    const size_t count = basis->labels.size();

    std::vector<RatFunc> weight(count);
    for (size_t i = 0; i < count; ++i) weight[i] = z_ratfunc(basis->labels[i]);

    const RatMatrix monomials = monomial_in_p(n);
    basis->p_coords_P = Matrix<RatFunc>(count, count);
    basis->p_coords_Q = Matrix<RatFunc>(count, count);

    // orthogonalize the monomial rows from the dominance-smallest label up;
    // triangularity plus orthogonality pins the outcome, so this is the P family
    std::vector<std::vector<RatFunc>> rows(count);
    std::vector<RatFunc> norms(count);
    for (size_t step = count; step-- > 0;) {
        std::vector<RatFunc> v(count);
        for (size_t j = 0; j < count; ++j) v[j] = RatFunc(monomials(step, j));
        for (size_t prev = step + 1; prev < count; ++prev) {
            const RatFunc c = inner(v, rows[prev], weight) / norms[prev];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < count; ++j) v[j] -= c * rows[prev][j];
        }
        norms[step] = inner(v, v, weight);
        rows[step] = std::move(v);
    }

    for (size_t i = 0; i < count; ++i) {
        const RatFunc scale{b_poly(basis->labels[i])};
        for (size_t j = 0; j < count; ++j) {
            basis->p_coords_P(i, j) = rows[i][j];
            basis->p_coords_Q(i, j) = scale * rows[i][j];
        }
    }

    const HallLittlewoodBasis& ref = *basis;
    cache.emplace(n, std::move(basis));
    return ref;
}

const GreenTable& green_table(int n) {
    static std::mutex guard;
    static std::map<int, std::unique_ptr<const GreenTable>> cache;
    std::scoped_lock lock(guard);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;

    const HallLittlewoodBasis& basis = hall_littlewood(n);
    auto table = std::make_unique<GreenTable>();
    table->n = n;
    table->labels = basis.labels;
    const size_t count = basis.labels.size();
    table->values = Matrix<Poly>(count, count);
    for (size_t j = 0; j < count; ++j) {
        const Rat z(stats(basis.labels[j], 2).z);
        const Poly denom = prod_one_minus(basis.labels[j]);
        for (size_t i = 0; i < count; ++i) {
            const Poly numer = basis.p_coords_Q(i, j).as_polynomial().scaled(z);
            auto [q, rem] = divmod(numer, denom);
            if (!(rem == Poly())) throw std::logic_error("green_table: non-polynomial entry");
            for (const Rat& c : q.coeffs())
                if (c.get_den() != 1) throw std::logic_error("green_table: non-integer coefficient");
            table->values(i, j) = std::move(q);
        }
    }

    const GreenTable& ref = *table;
    cache.emplace(n, std::move(table));
    return ref;
}

Matrix<CycloElem> evaluate_at_root(const Matrix<Poly>& values, const CycloFieldPtr& field) {
    const CycloElem root = CycloElem::omega(field);
    Matrix<CycloElem> out(values.rows(), values.cols());
    for (size_t i = 0; i < values.rows(); ++i)
        for (size_t j = 0; j < values.cols(); ++j) {
            const Poly& f = values(i, j);
            CycloElem acc = CycloElem::from_rational(field, Rat(0));
            for (int k = f.degree(); k >= 0; --k)
                acc = acc * root + CycloElem::from_rational(field, f.coeff(static_cast<size_t>(k)));
            out(i, j) = acc;
        }
    return out;
}

FactorizationReport verify_factorization(int n, int r) {
    FactorizationReport rep;
    rep.n = n;
    rep.r = r;

    const HallLittlewoodBasis& basis = hall_littlewood(n);
    const CycloFieldPtr field = make_cyclotomic_field(r);
    const size_t count = basis.labels.size();

    Matrix<Poly> q_coords(count, count);
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) q_coords(i, j) = basis.p_coords_Q(i, j).as_polynomial();
    const Matrix<CycloElem> q_at_root = evaluate_at_root(q_coords, field);

    std::vector<size_t> reg_idx, creg_idx;
    for (size_t i = 0; i < count; ++i) {
        if (basis.labels[i].is_regular(r)) reg_idx.push_back(i);
        if (basis.labels[i].is_class_regular(r)) creg_idx.push_back(i);
    }

    rep.q_vanishing = true;
    for (size_t i = 0; i < count; ++i) {
        bool all_zero = true;
        for (size_t j = 0; j < count; ++j)
            if (!q_at_root(i, j).is_zero()) all_zero = false;
        if (all_zero == basis.labels[i].is_regular(r)) rep.q_vanishing = false;
    }

    rep.class_regular_support = true;
    for (size_t i : reg_idx)
        for (size_t j = 0; j < count; ++j)
            if (!basis.labels[j].is_class_regular(r) && !q_at_root(i, j).is_zero())
                rep.class_regular_support = false;

    const Tables tables = build_tables(n, r);
    const Matrix<CycloElem> green_rc =
        evaluate_at_root(green_table(n).values, field).submatrix(reg_idx, creg_idx);
    const CycloElem det_rc = det_field(green_rc);
    CycloElem expected = CycloElem::from_rational(field, Rat(1));
    for (size_t j : creg_idx) expected = expected * z_at_omega(basis.labels[j], field);
    for (size_t i : reg_idx) expected = expected * b_at_omega(basis.labels[i], field);
    rep.det_squared_matches = det_rc * det_rc == expected;
    const Int a_c = aggregate(tables.class_regular, r).a;
    rep.det_squared_rational = expected.is_rational() && expected.to_rational() == Rat(a_c * a_c);

    // M = X_RC X(omega)_RC^{-1}
    const CycloElem one = CycloElem::from_rational(field, Rat(1));
    Matrix<CycloElem> x_rc(reg_idx.size(), creg_idx.size());
    for (size_t i = 0; i < reg_idx.size(); ++i)
        for (size_t j = 0; j < creg_idx.size(); ++j)
            x_rc(i, j) = CycloElem::from_rational(field, Rat(tables.X_RC.values(i, j)));
    const Matrix<CycloElem> m = x_rc * inverse_field(green_rc, one);
    rep.transition_unitriangular = true;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (i == j && !(m(i, j) == one)) rep.transition_unitriangular = false;
            if (j > i && !m(i, j).is_zero()) rep.transition_unitriangular = false;
        }
    return rep;
}

}  // namespace chartab
