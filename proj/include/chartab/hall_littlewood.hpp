#pragma once

#include <vector>

#include "chartab/cyclotomic.hpp"
#include "chartab/exact_linalg.hpp"
#include "chartab/partition.hpp"
#include "chartab/poly.hpp"
#include "chartab/ratfunc.hpp"

namespace chartab {

// m_lambda = sum_mu W(lambda, mu) p_mu over all partitions of n in canonical
// order; inverse of the block-sum count transition p_mu = sum xi^lambda(mu) m_lambda.
RatMatrix monomial_in_p(int n);

// deformation factor prod_i (1-t)(1-t^2)...(1-t^{m_i(lam)})
Poly b_poly(const Partition& lam);

// One-parameter deformation of the Schur basis: P is monic triangular
// against the monomials and orthogonal for <p_lam, p_mu> = delta z_lam(t),
// Q its rescaling by b_poly.  Rows are labels, columns the p-coordinates.
struct HallLittlewoodBasis {
    int n = 0;
    std::vector<Partition> labels;  // canonical order, all partitions of n
    Matrix<RatFunc> p_coords_P;
    Matrix<RatFunc> p_coords_Q;  // entries are polynomials in t
};

const HallLittlewoodBasis& hall_littlewood(int n);  // built once per n

// z_mu [p_mu]Q_lambda / prod_i (1 - t^{mu_i}); integer coefficients, and the
// specialization at t = 0 is the character table.
struct GreenTable {
    int n = 0;
    std::vector<Partition> labels;
    Matrix<Poly> values;  // row lambda, column mu
};

const GreenTable& green_table(int n);  // built once per n

Matrix<CycloElem> evaluate_at_root(const Matrix<Poly>& values, const CycloFieldPtr& field);

// At t = omega the Q's with regular labels restrict to the class-regular
// coordinates and factor the character table block: X_RC = M X(omega)_RC
// with M lower unitriangular, and det(X(omega)_RC)^2 equals
// prod_{mu in C} z_mu(omega) prod_{lambda in R} b_lambda(omega) = a_C^2.
struct FactorizationReport {
    int n = 0;
    int r = 0;
    bool q_vanishing = false;        // Q_lambda(omega) = 0 exactly off the regular set
    bool class_regular_support = false;  // [p_mu]Q_lambda(omega) = 0 off C
    bool det_squared_matches = false;
    bool det_squared_rational = false;  // the common value is a_C^2
    bool transition_unitriangular = false;
    bool ok() const {
        return q_vanishing && class_regular_support && det_squared_matches &&
               det_squared_rational && transition_unitriangular;
    }
};

FactorizationReport verify_factorization(int n, int r);

}  // namespace chartab
