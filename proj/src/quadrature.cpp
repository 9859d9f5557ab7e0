#include "geowsum/quadrature.hpp"

#include <cmath>

namespace geowsum {

Complex tanh_sinh_integrate(const ComplexIntegrand& f, const Real& lo, const Real& hi,
                            const Real& target_abs, const PrecisionContext& ctx,
                            unsigned max_level) {
    ScopedWorkingPrecision scope(ctx);
    if (!(lo < hi)) {
        throw DomainError("quadrature interval needs lo < hi");
    }
    const Real half = (hi - lo) / 2;
    const Real mid = (lo + hi) / 2;
    const Real pi_half = const_pi(ctx) / 2;
    // Past this abscissa the node weights sit far below the working epsilon.
    const double tmax =
        std::asinh((ctx.working_digits() * 2.302585 + 46.0) / 3.14159265358979);

    // Adds f at the transformed node for abscissa t; stable distance-to-endpoint
    // form keeps full relative precision in (x - lo) and (hi - x).
    auto add_node = [&](const Real& t, Complex& acc) {
        const Real u = pi_half * sinh(t);
        const Real ch = cosh(t);
        Real e2;
        if (u >= 0) {
            e2 = exp(u * -2);
        } else {
            e2 = exp(u * 2);
        }
        const Real denom = 1 + e2;
        const Real dist = half * 2 * e2 / denom;
        if (dist == 0) return;  // endpoint saturated; contribution below target
        const Real w = half * pi_half * ch * 4 * e2 / (denom * denom);
        Real x;
        if (u >= 0) {
            x = hi - dist;
        } else {
            x = lo + dist;
        }
        if (!(x > lo) || !(x < hi)) return;
        acc = acc + f(x) * w;
    };

    Real h = make_real(ctx, 1);
    double hd = 1.0;
    Complex level_sum = f(mid) * (half * pi_half);  // t = 0 node
    {
        const long count = static_cast<long>(std::ceil(tmax));
        for (long k = 1; k <= count; ++k) {
            const Real t = h * k;
            add_node(t, level_sum);
            add_node(-t, level_sum);
        }
    }
    Complex prev = level_sum * h;
    for (unsigned level = 1; level <= max_level; ++level) {
        h = h / 2;
        hd /= 2;
        const long count = static_cast<long>(std::ceil(tmax / hd));
        Complex fresh = make_complex(ctx);
        for (long k = 1; k <= count; k += 2) {
            const Real t = h * k;
            add_node(t, fresh);
            add_node(-t, fresh);
        }
        const Complex cur = prev / make_real(ctx, 2) + fresh * h;
        const Real diff = cabs(cur - prev);
        prev = cur;
        if (level >= 3 && diff <= target_abs) {
            return cur;
        }
    }
    throw ConvergenceError("quadrature levels exhausted before reaching the accuracy target");
}

Complex gauss_legendre_integrate(const ComplexIntegrand& f, const Real& lo, const Real& hi,
                                 unsigned nodes, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (nodes < 2) {
        throw DomainError("Gauss-Legendre needs at least 2 nodes");
    }
    if (!(lo < hi)) {
        throw DomainError("quadrature interval needs lo < hi");
    }
    const Real one = make_real(ctx, 1);
    const Real half_len = (hi - lo) / 2;
    const Real mid = (lo + hi) / 2;
    const unsigned N = nodes;
    Real eps = pow(make_real(ctx, 10), -static_cast<long>(ctx.working_digits()) + 2);

    // P_N and P'_N by the three-term recurrence.
    auto legendre_pair = [&](const Real& x, Real& p, Real& dp) {
        Real p0 = one;
        Real p1 = x;
        for (unsigned j = 2; j <= N; ++j) {
            const Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        p = p1;
        dp = N * (x * p1 - p0) / (x * x - one);
    };

    Complex acc = make_complex(ctx);
    const unsigned half_count = (N + 1) / 2;
    for (unsigned i = 0; i < half_count; ++i) {
        Real x = make_real(ctx);
        x = std::cos(3.14159265358979 * (i + 0.75) / (N + 0.5));
        Real p = make_real(ctx), dp = make_real(ctx, 1);
        for (int it = 0; it < 60; ++it) {
            legendre_pair(x, p, dp);
            const Real dx = p / dp;
            x = x - dx;
            if (abs(dx) <= eps) break;
        }
        legendre_pair(x, p, dp);
        const Real weight = 2 / ((one - x * x) * dp * dp);
        const bool center = (N % 2 == 1) && (i == (N - 1) / 2);
        const Real x_minus = mid - half_len * x;
        acc = acc + f(x_minus) * weight;
        if (!center) {
            const Real x_plus = mid + half_len * x;
            acc = acc + f(x_plus) * weight;
        }
    }
    return acc * half_len;
}

}  // namespace geowsum
