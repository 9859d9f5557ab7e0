#pragma once

#include "geowsum/complex_hp.hpp"
#include "geowsum/lambert_w.hpp"
#include "geowsum/precision.hpp"

namespace geowsum {

// First term a and constant ratio r of an infinite geometric series.
struct GeoSeries {
    Complex a;
    Complex r;
};

struct DeltaValue {
    Complex delta;
    BranchIndex branch;
    Real fixed_point_residual;  // |2^delta - delta|
};

struct BranchSum {
    Complex value;
    BranchIndex branch;
    GeoSeries series;
};

struct TetrationReport {
    Real residual;       // |T_depth(delta) - delta| for T: w -> 2^w
    Real amplification;  // (log2 * |delta|)^depth growth bound
};

// delta_n = -W_n(-log 2)/log 2, the branch-indexed fixed point of w -> 2^w.
DeltaValue delta(BranchIndex n, const PrecisionContext& ctx);

// delta_n - 1, the closed form assigned to 1 + 2 + 4 + 8 + ... on branch n.
Complex phi_sum(BranchIndex n, const PrecisionContext& ctx);

// a (rho^delta - 1)/(r - 1) with rho = |r| for negative real r (the
// negative-ratio convention) and rho = r otherwise. r = 1 is rejected;
// r = 0 degenerates to a.
BranchSum geo_sum_branch(const GeoSeries& series, BranchIndex n,
                         const PrecisionContext& ctx);

// x/(x-1) - x^(1-delta)/(x-1); closed form for 1 + 1/x + 1/x^2 + ...
Complex reciprocal_geo_sum(const Complex& x, BranchIndex n, const PrecisionContext& ctx);

// (delta x^delta - delta x^(delta-1) - x^delta + 1)/(x-1)^2, the
// term-by-term derivative closed form. Negative real x follows the same
// base rewrite as geo_sum_branch on every delta-shifted power.
Complex derivative_series(const Complex& x, BranchIndex n, const PrecisionContext& ctx);

// x * derivative_series(x, n): (delta x^(delta+1) - delta x^delta
// - x^(delta+1) + x)/(x-1)^2.
Complex weighted_derivative_series(const Complex& x, BranchIndex n,
                                   const PrecisionContext& ctx);

// (delta - delta x + x^delta - 1)/(x-1)^2.
Complex tail_coefficient_series(const Complex& x, BranchIndex n,
                                const PrecisionContext& ctx);

// 1 + 2 log2 / W_n(-log 2) - W_n(-log 2)/log 2, the sum of the ratio-2 and
// ratio-1/2 branch sums.
Complex combined_phi_series(BranchIndex n, const PrecisionContext& ctx);

// Quotient of the weighted derivative at sqrt(2) by the branch sum at
// sqrt(2); the quotient form is canonical (the simplified sqrt(delta) form
// is not branch-safe and is only compared against, never assumed).
Complex sqrt2_ratio(BranchIndex n, const PrecisionContext& ctx);

// Iterates w -> 2^w depth times from delta_n and reports the drift plus the
// first-order amplification bound (log2 * |delta|)^depth.
TetrationReport tetration_check(BranchIndex n, unsigned depth, const PrecisionContext& ctx);

// |exp(delta log 2) - delta|, the branch-free restatement of the fixed
// point; the principal-log form log(delta)/delta = log2 holds only where
// the principal branch matches (checked separately in tests).
Real log2_identity_residual(BranchIndex n, const PrecisionContext& ctx);

}  // namespace geowsum
