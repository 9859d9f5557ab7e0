#include "geowsum/branch_sums.hpp"

namespace geowsum {

namespace {

bool is_negative_real(const Complex& v) {
    return v.im == 0 && v.re < 0;
}

// rho^delta * base^shift with rho = |base| when base is a negative real
// (the negative-ratio convention); shift covers the small integer offsets
// appearing in the closed forms, applied as exact integer powers of base.
Complex delta_power(const Complex& base, const Complex& delta, int shift,
                    const PrecisionContext& ctx) {
    Complex rho = base;
    if (is_negative_real(base)) {
        rho = make_complex(ctx, -base.re);
    }
    Complex p = cpow_principal(rho, delta, ctx);
    for (int i = 0; i < shift; ++i) p = p * base;
    for (int i = 0; i > shift; --i) p = p / base;
    return p;
}

Complex one_c(const PrecisionContext& ctx) {
    return make_complex(ctx, 1);
}

}  // namespace

DeltaValue delta(BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Real log2 = const_log2(ctx);
    const Complex z = make_complex(ctx, -log2);
    const WValue wv = lambert_w(z, n, ctx);
    DeltaValue out;
    out.delta = (-wv.w) / log2;
    out.branch = n;
    out.fixed_point_residual = cabs(cexp(out.delta * log2, ctx) - out.delta);
    return out;
}

Complex phi_sum(BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    return delta(n, ctx).delta - make_real(ctx, 1);
}

BranchSum geo_sum_branch(const GeoSeries& series, BranchIndex n,
                         const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    BranchSum out;
    out.branch = n;
    out.series.a = make_complex(ctx, to_working(ctx, series.a.re), to_working(ctx, series.a.im));
    out.series.r = make_complex(ctx, to_working(ctx, series.r.re), to_working(ctx, series.r.im));
    const Complex& a = out.series.a;
    const Complex& r = out.series.r;
    if (is_zero(a)) {
        out.value = make_complex(ctx);
        return out;
    }
    if (is_zero(r)) {
        out.value = a;
        return out;
    }
    const Complex one = one_c(ctx);
    if (is_zero(r - one)) {
        throw DomainError("geometric branch sum is undefined at ratio 1");
    }
    const DeltaValue dv = delta(n, ctx);
    const Complex p = delta_power(r, dv.delta, 0, ctx);
    out.value = a * (p - one) / (r - one);
    return out;
}

Complex reciprocal_geo_sum(const Complex& x, BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex xc = make_complex(ctx, to_working(ctx, x.re), to_working(ctx, x.im));
    if (is_zero(xc)) {
        throw DomainError("reciprocal branch sum requires x != 0");
    }
    const Complex one = one_c(ctx);
    if (is_zero(xc - one)) {
        throw DomainError("reciprocal branch sum is undefined at x = 1");
    }
    const DeltaValue dv = delta(n, ctx);
    // x/(x-1) - x * rho^(-delta)/(x-1) with rho following the ratio 1/x.
    const Complex rinv = one / xc;
    const Complex p = delta_power(rinv, dv.delta, 0, ctx);
    const Complex denom = xc - one;
    return xc / denom - xc * p / denom;
}

Complex derivative_series(const Complex& x, BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex xc = make_complex(ctx, to_working(ctx, x.re), to_working(ctx, x.im));
    const Complex one = one_c(ctx);
    if (is_zero(xc)) {
        throw DomainError("derivative branch sum requires x != 0");
    }
    if (is_zero(xc - one)) {
        throw DomainError("derivative branch sum is undefined at x = 1");
    }
    const DeltaValue dv = delta(n, ctx);
    const Complex& d = dv.delta;
    const Complex xd = delta_power(xc, d, 0, ctx);
    const Complex xdm1 = delta_power(xc, d, -1, ctx);
    const Complex denom = (xc - one) * (xc - one);
    return (d * xd - d * xdm1 - xd + one) / denom;
}

Complex weighted_derivative_series(const Complex& x, BranchIndex n,
                                   const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex xc = make_complex(ctx, to_working(ctx, x.re), to_working(ctx, x.im));
    const Complex one = one_c(ctx);
    if (is_zero(xc)) {
        throw DomainError("weighted derivative branch sum requires x != 0");
    }
    if (is_zero(xc - one)) {
        throw DomainError("weighted derivative branch sum is undefined at x = 1");
    }
    const DeltaValue dv = delta(n, ctx);
    const Complex& d = dv.delta;
    const Complex xd = delta_power(xc, d, 0, ctx);
    const Complex xdp1 = delta_power(xc, d, 1, ctx);
    const Complex denom = (xc - one) * (xc - one);
    return (d * xdp1 - d * xd - xdp1 + xc) / denom;
}

Complex tail_coefficient_series(const Complex& x, BranchIndex n,
                                const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex xc = make_complex(ctx, to_working(ctx, x.re), to_working(ctx, x.im));
    const Complex one = one_c(ctx);
    if (is_zero(xc)) {
        throw DomainError("tail coefficient branch sum requires x != 0");
    }
    if (is_zero(xc - one)) {
        throw DomainError("tail coefficient branch sum is undefined at x = 1");
    }
    const DeltaValue dv = delta(n, ctx);
    const Complex& d = dv.delta;
    const Complex xd = delta_power(xc, d, 0, ctx);
    const Complex denom = (xc - one) * (xc - one);
    return (d - d * xc + xd - one) / denom;
}

Complex combined_phi_series(BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Real log2 = const_log2(ctx);
    const Complex z = make_complex(ctx, -log2);
    const WValue wv = lambert_w(z, n, ctx);
    const Complex one = one_c(ctx);
    const Real two = make_real(ctx, 2);
    return one + two * log2 / wv.w - wv.w / log2;
}

Complex sqrt2_ratio(BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    Real s = make_real(ctx, 2);
    s = sqrt(s);
    const Complex x = make_complex(ctx, s);
    const Complex num = weighted_derivative_series(x, n, ctx);
    GeoSeries g;
    g.a = one_c(ctx);
    g.r = x;
    const Complex den = geo_sum_branch(g, n, ctx).value;
    if (is_zero(den)) {
        throw DomainError("ratio undefined: branch sum at sqrt(2) vanishes");
    }
    return num / den;
}

TetrationReport tetration_check(BranchIndex n, unsigned depth, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Real log2 = const_log2(ctx);
    const DeltaValue dv = delta(n, ctx);
    Complex w = dv.delta;
    for (unsigned i = 0; i < depth; ++i) {
        w = cexp(w * log2, ctx);
    }
    TetrationReport out;
    out.residual = cabs(w - dv.delta);
    Real amp = make_real(ctx, 1);
    const Real step = log2 * cabs(dv.delta);
    for (unsigned i = 0; i < depth; ++i) amp *= step;
    out.amplification = amp;
    return out;
}

Real log2_identity_residual(BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Real log2 = const_log2(ctx);
    const DeltaValue dv = delta(n, ctx);
    return cabs(cexp(dv.delta * log2, ctx) - dv.delta);
}

}  // namespace geowsum
