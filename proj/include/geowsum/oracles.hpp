#pragma once

#include "geowsum/branch_sums.hpp"
#include "geowsum/quadrature.hpp"

namespace geowsum {

// Finite truncation of a + ar + ar^2 + ... by direct accumulation; r = 1 is
// allowed here (N copies of a), unlike the closed-form sum.
Complex partial_sum_oracle(const GeoSeries& series, unsigned long N, const PrecisionContext& ctx);

struct Hyp2F1Result {
    Complex value;
    Real last_term;  // magnitude of the final accumulated term
};

// K-term truncation of the Gauss hypergeometric series
// sum_k (a)_k (b)_k / ((c)_k k!) x^k; requires |x| < 1 and c not a
// non-positive integer.
Hyp2F1Result hyp2f1_series(const Complex& a, const Complex& b, const Complex& c,
                           const Complex& x, unsigned K, const PrecisionContext& ctx);

// Numerical value of the core integral F(m; n) = integral_0^m (x^delta - 1)/(x - 1) dx
// for 0 < m < 1. Small |Im delta| integrates the whole integrand directly on
// (0, m); past |Im delta| = 50 the oscillation is unresolvable on the real
// line and the delta-part is evaluated on an equivalent rotated ray (no poles
// are crossed: the integrand's poles sit on the imaginary axis of the
// substituted variable, strictly left of the contour).
Complex integral_core_quadrature(const Real& m, BranchIndex n, const QuadratureSpec& spec,
                                 const PrecisionContext& ctx);

// Residual of Log(m-1) = i pi - sum_k m^(delta+1+k)/(delta+1+k) - sum_j m^j/j
// at truncation K of both sums.
Real log_expansion_check(const Real& m, BranchIndex n, unsigned K, const PrecisionContext& ctx);

// Residual |I - Gamma(s) zeta(s)| where I re-creates the integral
// integral_0^inf u^(s-1)(1 - e^(-u delta))/(e^u - 1) du as a delta-free part
// on (0, U] (tail bounded analytically) minus the delta part on a rotated
// ray. Requires Re(s) > 1.1 and Re(delta_n) > 0.
Real mellin_check(const Complex& s, BranchIndex n, const QuadratureSpec& spec,
                  const PrecisionContext& ctx);

struct IntegratedSeriesReport {
    Real residual;  // |lhs - rhs|
    Complex lhs;    // K terms of 1 + m/2 + m^2/3 + ...
    Complex rhs;    // K terms of m^(delta-1)/delta + m^(delta-2)/(delta-1) + ...
    unsigned skipped_terms;  // right-side terms dropped for near-zero denominators
};

// The convergent left side approaches -log(1-m)/m; the right side is a
// formally rearranged tail whose drift is reported as data, not asserted.
IntegratedSeriesReport integrated_series_check(const Real& m, BranchIndex n, unsigned K,
                                               const PrecisionContext& ctx);

}  // namespace geowsum
