#include "geowsum/lambert_w.hpp"

#include "geowsum/format.hpp"

namespace geowsum {

namespace {

// Branch strips at the converged value. n = 0/±1 get the cut-adjacent
// extensions (conjugate pairs at real z left of the branch point live at
// |Im| < pi even off the principal branch).
bool strip_ok(const Real& im, BranchIndex n, const Real& pi) {
    if (n == 0) return im > -pi && im <= pi;
    if (n == 1) return im >= 0 && im < 3 * pi;
    if (n == -1) return im <= 0 && im > -3 * pi;
    if (n >= 2) return im > (2 * n - 1) * pi && im < (2 * n + 1) * pi;
    return im > (2 * n + 1) * pi && im < (2 * n + 3) * pi;
}

struct IterationResult {
    Complex w;
    Real residual;
};

// Halley refinement of w e^w = z. Runs to the rounding floor: stops after
// the residual fails to improve 5 times in a row or the cap is reached.
IterationResult halley(const Complex& seed, const Complex& z, bool damp_first,
                       const PrecisionContext& ctx) {
    Complex w = seed;
    Complex best_w = seed;
    Real best_resid = make_real(ctx);
    bool have_best = false;
    int stall = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Complex ew = cexp(w, ctx);
        Complex f = w * ew - z;
        Real resid = cabs(f);
        if (!have_best || resid < best_resid) {
            best_resid = resid;
            best_w = w;
            have_best = true;
            stall = 0;
        } else if (++stall >= 5) {
            break;
        }
        if (resid.is_zero()) break;
        Complex one_plus_w = w + make_real(ctx, 1);
        if (is_zero(one_plus_w)) {
            w.re += Real(ctx.tol());
            continue;
        }
        Complex fp = ew * one_plus_w;
        Complex denom =
            fp - f * (w + make_real(ctx, 2)) / (one_plus_w * make_real(ctx, 2));
        if (is_zero(denom)) denom = fp;
        Complex dw = f / denom;
        if (damp_first && iter == 0) dw = dw * (make_real(ctx, 1) / 2);
        w = w - dw;
    }
    return IterationResult{best_w, best_resid};
}

}  // namespace

Complex branch_seed(const Complex& z, BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    Complex zz = make_complex(ctx, z.re, z.im);
    Real pi = const_pi(ctx);
    Real az = cabs(zz);
    Real inv_e = exp(make_real(ctx, -1));

    if (n == 0 || n == -1) {
        // Near the branch point -1/e both adjacent branches use the
        // sqrt-series in p = ±sqrt(2(e z + 1)).
        Complex bp_off = zz + inv_e;
        if (cabs(bp_off) <= Real(make_real(ctx, 4)) / 10) {
            Complex two_ez1 = (zz * exp(make_real(ctx, 1)) + make_real(ctx, 1)) *
                              make_real(ctx, 2);
            Complex p = csqrt_principal(two_ez1, ctx);
            if (n == -1) p = -p;
            Complex p2 = p * p;
            Complex p3 = p2 * p;
            Complex p4 = p2 * p2;
            Complex w = make_complex(ctx, -1, 0) + p - p2 / make_real(ctx, 3) +
                        p3 * make_real(ctx, 11) / make_real(ctx, 72) -
                        p4 * make_real(ctx, 43) / make_real(ctx, 540);
            return w;
        }
    }
    if (n == 0) {
        if (az <= Real(make_real(ctx, 3)) / 10) {
            Complex one = make_complex(ctx, 1, 0);
            return zz * (one - zz + zz * zz * make_real(ctx, 3) / 2);
        }
        if (az <= 3) {
            return clog_principal(zz + make_real(ctx, 1), ctx);
        }
        Complex l = clog_principal(zz, ctx);
        return l - clog_principal(l, ctx);
    }
    if (n == -1 && zz.im.is_zero() && zz.re < 0 && zz.re > -inv_e) {
        // Real lower branch on (-1/e, 0).
        Real lx = log(-zz.re);
        return make_complex(ctx, lx - log(-lx));
    }
    Complex l1 = clog_principal(zz, ctx);
    l1.im += 2 * pi * make_real(ctx, static_cast<long>(n));
    Complex l2 = clog_principal(l1, ctx);
    return l1 - l2 + l2 / l1;
}

WValue lambert_w(const Complex& z, BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    Complex zz = make_complex(ctx, z.re, z.im);
    if (is_zero(zz)) {
        if (n == 0) return WValue{make_complex(ctx), make_real(ctx), 0};
        throw DomainError("W_n(0) exists only for n = 0");
    }
    Real pi = const_pi(ctx);
    Complex seed = branch_seed(zz, n, ctx);
    IterationResult r = halley(seed, zz, false, ctx);
    if (!strip_ok(r.w.im, n, pi)) {
        r = halley(seed, zz, true, ctx);
        if (!strip_ok(r.w.im, n, pi)) {
            throw ConvergenceError("lambert_w: converged outside the strip of branch " +
                                   std::to_string(n) + " (w = " + format_complex(r.w, 20) +
                                   ")");
        }
    }
    Real tol = ctx.tol();
    if (!(r.residual <= tol)) {
        throw ConvergenceError("lambert_w: residual " + format_real(r.residual, 8) +
                               " above tolerance " + format_real(tol, 4) + " on branch " +
                               std::to_string(n));
    }
    return WValue{r.w, r.residual, n};
}

}  // namespace geowsum
