#include "geowsum/oracles.hpp"

#include "geowsum/zeta_eta.hpp"

#include <cmath>

namespace geowsum {

namespace {

Real quad_target(const PrecisionContext& ctx) {
    return pow(make_real(ctx, 10), -static_cast<long>(ctx.digits + 5));
}

void validate_spec(const QuadratureSpec& spec) {
    if (spec.node_count < 16) {
        throw DomainError("quadrature spec needs node_count >= 16");
    }
    if (!(spec.lo < spec.hi)) {
        throw DomainError("quadrature spec needs lo < hi");
    }
}

}  // namespace

Complex partial_sum_oracle(const GeoSeries& series, unsigned long N, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (N < 1) {
        throw DomainError("partial sums need N >= 1");
    }
    const Complex a = make_complex(ctx, to_working(ctx, series.a.re), to_working(ctx, series.a.im));
    const Complex r = make_complex(ctx, to_working(ctx, series.r.re), to_working(ctx, series.r.im));
    Complex sum = make_complex(ctx);
    Complex term = a;
    for (unsigned long k = 0; k < N; ++k) {
        sum = sum + term;
        term = term * r;
    }
    return sum;
}

Hyp2F1Result hyp2f1_series(const Complex& a, const Complex& b, const Complex& c,
                           const Complex& x, unsigned K, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (K < 1) {
        throw DomainError("hypergeometric truncation needs K >= 1");
    }
    if (c.im == 0 && floor(c.re) == c.re && c.re <= 0) {
        throw DomainError("hypergeometric series undefined: c is a non-positive integer");
    }
    const Complex xc = make_complex(ctx, to_working(ctx, x.re), to_working(ctx, x.im));
    if (!(cabs(xc) < 1)) {
        throw DomainError("hypergeometric truncation bound requires |x| < 1");
    }
    Complex term = make_complex(ctx, 1);
    Complex value = term;
    for (unsigned k = 0; k + 1 < K; ++k) {
        const Real kr = make_real(ctx, static_cast<long>(k));
        term = term * (a + kr) * (b + kr) * xc / ((c + kr) * (kr + 1));
        value = value + term;
    }
    Hyp2F1Result out;
    out.value = value;
    out.last_term = cabs(term);
    return out;
}

Complex integral_core_quadrature(const Real& m, BranchIndex n, const QuadratureSpec& spec,
                                 const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    validate_spec(spec);
    const Real mr = to_working(ctx, m);
    if (!(mr > 0) || !(mr < 1)) {
        throw DomainError("core integral requires 0 < m < 1");
    }
    if (spec.lo < 0 || spec.hi > mr) {
        throw DomainError("quadrature spec interval must lie inside (0, m)");
    }
    const Complex d = delta(n, ctx).delta;
    const Real target = quad_target(ctx);
    const Real im_mag = abs(d.im);
    if (im_mag <= 50) {
        // Direct route: x^delta = exp(delta log x) with the real log on (0, m).
        auto integrand = [&](const Real& x) -> Complex {
            const Complex xp = cexp(d * log(x), ctx);
            return (xp - make_real(ctx, 1)) / (x - make_real(ctx, 1));
        };
        if (spec.scheme == QuadScheme::gauss_legendre) {
            return gauss_legendre_integrate(integrand, spec.lo, spec.hi, spec.node_count, ctx);
        }
        return tanh_sinh_integrate(integrand, spec.lo, spec.hi, target, ctx);
    }
    // Oscillatory route: with x = e^-v,
    //   integral_0^m (x^delta - 1)/(x - 1) dx
    //     = -log(1-m) - integral_{v0}^{inf} e^{-(delta+1)v}/(1 - e^{-v}) dv,
    // and the remaining integral is taken along v = v0 + t e^{i theta},
    // theta = ±pi/4 on the side where e^{-(delta+1)v} decays. All poles of
    // the integrand lie on Re(v) = 0, left of the contour (v0 = -log m > 0),
    // so the rotation crosses none of them.
    const Real v0 = -log(mr);
    const int sign = (d.im < 0) ? +1 : -1;
    const Real c45 = sqrt(make_real(ctx, 2)) / 2;
    const Complex dir = make_complex(ctx, c45, sign > 0 ? c45 : -c45);  // e^{i theta}
    const Complex dp1 = d + make_real(ctx, 1);
    const Real alpha = (dp1 * dir).re;  // decay rate along the ray
    if (!(alpha > 0)) {
        throw ConvergenceError("rotated-ray route lost its decay direction");
    }
    const Real t_max = (make_real(ctx, static_cast<long>(ctx.digits) + 12) * log(make_real(ctx, 10)) +
                        v0 * dp1.re) /
                       alpha;
    auto ray_integrand = [&](const Real& t) -> Complex {
        const Complex v = make_complex(ctx, v0) + dir * t;
        const Complex num = cexp(-(dp1 * v), ctx);
        const Complex den = make_real(ctx, 1) - cexp(-v, ctx);
        return num / den;
    };
    const Complex ray =
        dir * tanh_sinh_integrate(ray_integrand, make_real(ctx), t_max, target, ctx);
    const Real log_part = -log(1 - mr);
    return make_complex(ctx, log_part) - ray;
}

Real log_expansion_check(const Real& m, BranchIndex n, unsigned K, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (K < 1) {
        throw DomainError("log expansion check needs K >= 1");
    }
    const Real mr = to_working(ctx, m);
    if (!(abs(mr) > 0) || !(abs(mr) < 1)) {
        throw DomainError("log expansion check requires 0 < |m| < 1");
    }
    const Complex mc = make_complex(ctx, mr);
    const Complex one = make_complex(ctx, 1);
    const Complex lhs = clog_principal(mc - one, ctx);
    const Complex d = delta(n, ctx).delta;
    Complex delta_sum = make_complex(ctx);
    for (unsigned k = 0; k < K; ++k) {
        const Complex e = d + make_real(ctx, static_cast<long>(k) + 1);
        delta_sum = delta_sum + cpow_principal(mc, e, ctx) / e;
    }
    Complex log_sum = make_complex(ctx);
    Complex mpow = mc;
    for (unsigned j = 1; j <= K; ++j) {
        log_sum = log_sum + mpow / make_real(ctx, static_cast<long>(j));
        mpow = mpow * mc;
    }
    const Complex rhs = make_complex(ctx, make_real(ctx), const_pi(ctx)) - delta_sum - log_sum;
    return cabs(lhs - rhs);
}

Real mellin_check(const Complex& s_in, BranchIndex n, const QuadratureSpec& spec,
                  const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    validate_spec(spec);
    const Complex s = make_complex(ctx, to_working(ctx, s_in.re), to_working(ctx, s_in.im));
    const Real margin = make_real(ctx, 11) / 10;
    if (!(s.re > margin)) {
        throw DomainError("Mellin check requires Re(s) > 1.1");
    }
    const Complex d = delta(n, ctx).delta;
    if (!(d.re > 0)) {
        throw DomainError("Mellin check excludes branches with Re(delta) <= 0");
    }
    const Real target = quad_target(ctx);
    const Complex one = make_complex(ctx, 1);
    const Real ln10 = log(make_real(ctx, 10));

    // Delta-free part on (0, U]; beyond U the integrand is under the target.
    const Real U = (make_real(ctx, static_cast<long>(ctx.digits) + 12)) * ln10 + 30;
    auto plain = [&](const Real& u) -> Complex {
        const Complex upow = cexp((s - one) * log(u), ctx);
        // expm1: the clustered nodes sit close enough to 0 that exp(u) - 1
        // would round to an exact zero denominator
        return upow / expm1(u);
    };
    const Complex i1 = tanh_sinh_integrate(plain, make_real(ctx), U, target, ctx);

    // Delta part along u = t e^{i theta}: poles of 1/(e^u - 1) lie on the
    // imaginary axis (u = 2 pi i k, k != 0) and the sector swept between the
    // real axis and the ray contains none of them.
    const int sign = (d.im < 0) ? +1 : -1;
    const Real c45 = sqrt(make_real(ctx, 2)) / 2;
    const Complex dir = make_complex(ctx, c45, sign > 0 ? c45 : -c45);
    const Real alpha = (d * dir).re + c45;  // decay of e^{-u delta}/(e^u - 1) along the ray
    if (!(alpha > 0)) {
        throw ConvergenceError("rotated-ray route lost its decay direction");
    }
    const Real t_max = (make_real(ctx, static_cast<long>(ctx.digits) + 12) * ln10 + 30) / alpha;
    auto rotated = [&](const Real& t) -> Complex {
        const Complex u = dir * t;
        const Complex upow = cexp((s - one) * clog_principal(u, ctx), ctx);
        const Complex decay = cexp(-(u * d), ctx);
        const Complex den = cexp(u, ctx) - one;
        return upow * decay / den;
    };
    const unsigned nodes = std::max(spec.node_count, 200u);
    const Complex i2 = dir * gauss_legendre_integrate(rotated, make_real(ctx), t_max, nodes, ctx);

    const Complex reference = gamma_hp(s, ctx) * zeta_dirichlet(s, ctx);
    return cabs(i1 - i2 - reference);
}

IntegratedSeriesReport integrated_series_check(const Real& m, BranchIndex n, unsigned K,
                                               const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (K < 1) {
        throw DomainError("integrated series check needs K >= 1");
    }
    const Real mr = to_working(ctx, m);
    if (!(mr > 0) || !(mr < 1)) {
        throw DomainError("integrated series check requires 0 < m < 1");
    }
    IntegratedSeriesReport out;
    out.skipped_terms = 0;
    const Complex d = delta(n, ctx).delta;
    Complex lhs = make_complex(ctx);
    Real mpow = make_real(ctx, 1);
    for (unsigned k = 0; k < K; ++k) {
        lhs = lhs + make_complex(ctx, mpow / (k + 1));
        mpow = mpow * mr;
    }
    Complex rhs = make_complex(ctx);
    const Real lnm = log(mr);
    for (unsigned k = 0; k < K; ++k) {
        const Complex den = d - make_real(ctx, static_cast<long>(k));
        if (cabs(den) <= ctx.tol()) {
            ++out.skipped_terms;
            continue;
        }
        const Complex e = d - make_real(ctx, static_cast<long>(k) + 1);
        rhs = rhs + cexp(e * lnm, ctx) / den;
    }
    out.lhs = lhs;
    out.rhs = rhs;
    out.residual = cabs(lhs - rhs);
    return out;
}

}  // namespace geowsum
