#include "geowsum/zeta_eta.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace geowsum {

namespace {

using boost::multiprecision::mpq_rational;
using boost::multiprecision::mpz_int;

Complex norm_c(const PrecisionContext& ctx, const Complex& z) {
    return make_complex(ctx, to_working(ctx, z.re), to_working(ctx, z.im));
}

Real rational_to_real(const mpq_rational& q) {
    return Real(numerator(q).str()) / Real(denominator(q).str());
}

// Extends B with Bernoulli numbers (exact rationals) up to index m inclusive,
// via B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j.
void extend_bernoulli(std::vector<mpq_rational>& B, unsigned m) {
    if (B.empty()) B.push_back(mpq_rational(1));
    for (unsigned i = static_cast<unsigned>(B.size()); i <= m; ++i) {
        mpq_rational acc(0);
        mpz_int binom(1);  // C(i+1, 0)
        for (unsigned j = 0; j < i; ++j) {
            acc += mpq_rational(binom) * B[j];
            binom = binom * (mpz_int(i) + 1 - j) / (j + 1);
        }
        B.push_back(-acc / mpq_rational(mpz_int(i) + 1));
    }
}

// Absolute tail target for internal truncations: 10^-(digits+5).
Real tail_target(const PrecisionContext& ctx) {
    Real t = make_real(ctx, 10);
    return pow(t, -static_cast<long>(ctx.digits + 5));
}

Complex complex_pow_real_base(const Real& base, const Complex& e, const PrecisionContext& ctx) {
    return cexp(e * log(base), ctx);
}

Complex zeta_plain_sum(const Complex& s, const Real& target, const PrecisionContext& ctx) {
    const Real sigma = s.re;
    // Integral-test bound: tail <= N^(1-sigma)/(sigma-1) <= target.
    Real lnn = log(target * (sigma - 1)) / (1 - sigma);
    if (lnn < 0) lnn = 0;
    Real bound = ceil(exp(lnn)) + 2;
    if (bound > 1000000) {
        throw ConvergenceError("zeta truncated-series length exceeds the supported size");
    }
    const unsigned long N = std::max(2ul, bound.convert_to<unsigned long>());
    Complex sum = make_complex(ctx);
    for (unsigned long k = 1; k <= N; ++k) {
        sum = sum + cexp(-(s * log(make_real(ctx, static_cast<long>(k)))), ctx);
    }
    return sum;
}

Complex zeta_euler_maclaurin(const Complex& s, const Real& target, const PrecisionContext& ctx) {
    const Complex one = make_complex(ctx, 1);
    const Real sigma = s.re;
    std::vector<mpq_rational> B;
    unsigned long N = std::max<unsigned long>(20, ctx.working_digits());
    constexpr unsigned kMaxTerms = 400;
    for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
        Complex sum = make_complex(ctx);
        for (unsigned long k = 1; k <= N; ++k) {
            sum = sum + cexp(-(s * log(make_real(ctx, static_cast<long>(k)))), ctx);
        }
        const Real Nr = make_real(ctx, static_cast<long>(N));
        const Complex NmS = cexp(-(s * log(Nr)), ctx);   // N^-s
        Complex total = sum + (NmS * Nr) / (s - one) - NmS / make_real(ctx, 2);

        Complex poch = s;                 // prod_{j=0}^{2k-2} (s+j) at k=1
        Complex npow = NmS / Nr;          // N^(-s-1) at k=1
        Real fact = make_real(ctx, 2);    // (2k)! at k=1
        const Real n2 = Nr * Nr;
        Real prev_mag = make_real(ctx);
        bool grew_twice = false;
        for (unsigned k = 1; k <= kMaxTerms; ++k) {
            extend_bernoulli(B, 2 * k);
            const Real bk = rational_to_real(B[2 * k]);
            const Complex term = (bk / fact) * poch * npow;
            const Real mag = cabs(term);
            // Stopping rule: the remainder after dropping this and later terms
            // is bounded by |term| * |s+2k-1|/(sigma+2k-1).
            const Real rem = mag * cabs(s + make_real(ctx, 2 * k - 1)) /
                             (sigma + make_real(ctx, 2 * k - 1));
            if (rem <= target) {
                return total;
            }
            total = total + term;
            if (k > 4 && mag > prev_mag) {
                if (grew_twice) break;  // asymptotic floor reached; enlarge N
                grew_twice = true;
            } else {
                grew_twice = false;
            }
            prev_mag = mag;
            poch = poch * (s + make_real(ctx, 2 * k - 1)) * (s + make_real(ctx, 2 * k));
            npow = npow / n2;
            fact = fact * (2 * k + 1) * (2 * k + 2);
        }
    }
    throw ConvergenceError("zeta tail correction failed to reach the digit target");
}

// ln Gamma via the Stirling series at Re(z) >= shift target.
Complex log_gamma_stirling(const Complex& z, const PrecisionContext& ctx) {
    const Real pi = const_pi(ctx);
    const Complex lnz = clog_principal(z, ctx);
    const Real half = make_real(ctx, 1) / 2;
    Complex acc = (z - half) * lnz - z + make_complex(ctx, log(2 * pi) / 2);
    Real target = tail_target(ctx) / 1000;
    std::vector<mpq_rational> B;
    const Complex zinv = make_complex(ctx, 1) / z;
    const Complex zinv2 = zinv * zinv;
    Complex pw = zinv;  // z^(1-2k) at k=1
    Real prev_mag = make_real(ctx);
    const unsigned kMax = 4 * ctx.working_digits() + 50;
    for (unsigned k = 1; k <= kMax; ++k) {
        extend_bernoulli(B, 2 * k);
        const Real bk = rational_to_real(B[2 * k]);
        const Complex term = (bk / make_real(ctx, static_cast<long>(2 * k) *
                                                      static_cast<long>(2 * k - 1))) *
                             pw;
        const Real mag = cabs(term);
        if (mag <= target) {
            return acc + term;
        }
        if (k > 3 && mag > prev_mag) {
            // Asymptotic floor: by construction of the shift it sits below the
            // working target; stop adding.
            return acc;
        }
        acc = acc + term;
        prev_mag = mag;
        pw = pw * zinv2;
    }
    return acc;
}

}  // namespace

Complex zeta_dirichlet(const Complex& s_in, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex s = norm_c(ctx, s_in);
    const Real margin = make_real(ctx, 11) / 10;
    if (!(s.re > margin)) {
        throw DomainError(
            "zeta series route requires Re(s) > 1.1; use the functional-equation route instead");
    }
    const Real target = tail_target(ctx);
    if (s.re >= 40) {
        return zeta_plain_sum(s, target, ctx);
    }
    return zeta_euler_maclaurin(s, target, ctx);
}

Complex gamma_hp(const Complex& s_in, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex s = norm_c(ctx, s_in);
    const bool integer_s = (s.im == 0) && (floor(s.re) == s.re);
    if (integer_s) {
        if (s.re <= 0) {
            throw DomainError("gamma has poles at the non-positive integers");
        }
        if (s.re <= 20000) {
            const unsigned long m = s.re.convert_to<unsigned long>();
            mpz_int f(1);
            for (unsigned long j = 2; j + 1 <= m; ++j) f *= j;
            return make_complex(ctx, Real(f.str()));
        }
    }
    // Shift until the Stirling series converges below the working target.
    const long shift_floor =
        static_cast<long>(std::ceil(ctx.working_digits() * 0.3665)) + 3;
    long m = 0;
    {
        Real need = shift_floor - s.re;
        if (need > 0) m = need.convert_to<long>() + 1;
    }
    const Complex z = s + make_real(ctx, m);
    const Complex g = cexp(log_gamma_stirling(z, ctx), ctx);
    Complex prod = make_complex(ctx, 1);
    for (long j = 0; j < m; ++j) {
        prod = prod * (s + make_real(ctx, j));
    }
    if (is_zero(prod)) {
        throw DomainError("gamma has poles at the non-positive integers");
    }
    return g / prod;
}

Complex zeta_functional(const Complex& s_in, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex s = norm_c(ctx, s_in);
    if (!(s.re < 0)) {
        throw DomainError("the functional-equation route evaluates only Re(s) < 0");
    }
    const Real pi = const_pi(ctx);
    const Real ln2 = const_log2(ctx);
    const Complex one = make_complex(ctx, 1);
    Complex sin_factor;
    if (s.im == 0 && floor(s.re) == s.re) {
        const long long mi = s.re.convert_to<long long>();
        const long long mm = ((mi % 4) + 4) % 4;
        if (mm == 0 || mm == 2) {
            return make_complex(ctx);  // negative even integer: exactly zero
        }
        sin_factor = make_complex(ctx, mm == 1 ? 1 : -1);
    } else {
        sin_factor = csin(s * (pi / 2), ctx);
    }
    const Complex two_s = cexp(s * ln2, ctx);
    const Complex pi_sm1 = cexp((s - one) * log(pi), ctx);
    const Complex g = gamma_hp(one - s, ctx);
    const Complex zt = zeta_dirichlet(one - s, ctx);
    return two_s * pi_sm1 * sin_factor * g * zt;
}

EtaFactorPair eta_factor(const Complex& s_in, BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex s = norm_c(ctx, s_in);
    if (!(s.re > 0)) {
        throw DomainError("eta factor requires Re(s) > 0");
    }
    const Real ln2 = const_log2(ctx);
    const Complex one = make_complex(ctx, 1);
    const Complex d = delta(n, ctx).delta;
    const Complex a = cexp((s * (d + one)) * ln2, ctx);  // 2^(s(delta+1))
    const Complex b = cexp((d * s) * ln2, ctx);          // 2^(delta s)
    const Complex c = cexp(s * ln2, ctx);                // 2^s
    if (cabs(b - one) <= ctx.tol()) {
        throw DomainError("eta factor is degenerate here: 2^(delta s) = 1 within tolerance");
    }
    EtaFactorPair out;
    out.branch = n;
    out.exact = (a - b * make_real(ctx, 2) + one) / (c * (b - one));
    out.classic = one - cexp((one - s) * ln2, ctx);
    // Cross-validate the rearranged form [1 - 2^(1-s) + 2^(-s(delta+1))]/(1 - 2^(-delta s)).
    const Complex re_num = one - cexp((one - s) * ln2, ctx) + cexp(-(s * (d + one)) * ln2, ctx);
    const Complex re_den = one - cexp(-(d * s) * ln2, ctx);
    const Complex rearranged = re_num / re_den;
    const Real scale = std::max(Real(cabs(out.exact)), Real(make_real(ctx, 1)));
    if (cabs(out.exact - rearranged) > ctx.tol() * scale) {
        throw ConvergenceError("eta factor algebraic forms disagree beyond tolerance");
    }
    return out;
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Complex euler_error_term(unsigned long p, const Complex& s_in, BranchIndex n,
                         const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (!is_prime(p)) {
        throw DomainError("euler error term requires a prime p");
    }
    const Complex s = norm_c(ctx, s_in);
    const Complex one = make_complex(ctx, 1);
    const Real pr = make_real(ctx, static_cast<long>(p));
    const Complex ps = complex_pow_real_base(pr, s, ctx);
    if (cabs(ps - one) <= ctx.tol()) {
        throw DomainError("euler error term is degenerate here: p^s = 1 within tolerance");
    }
    const Complex d = delta(n, ctx).delta;
    const Complex pw = complex_pow_real_base(pr, s * (one - d), ctx);
    return -(pw / (ps - one));
}

Complex harmonic_branch(BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Real ln2 = const_log2(ctx);
    const WValue wv = lambert_w(make_complex(ctx, -ln2), n, ctx);
    return (wv.w + ln2) * make_real(ctx, -2);
}

HarmonicPartial harmonic_reciprocal_sum(BranchIndex n, unsigned K, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (K == 0) {
        throw DomainError("harmonic partial sum needs K >= 1");
    }
    const Real ln2 = const_log2(ctx);
    const WValue wv = lambert_w(make_complex(ctx, -ln2), n, ctx);
    HarmonicPartial out;
    out.companion = (wv.w * (make_real(ctx, 2) / ln2)) + make_real(ctx, 2);
    Complex sum = make_complex(ctx);
    for (unsigned k = 0; k < K; ++k) {
        const Complex den = wv.w + ln2 * make_real(ctx, static_cast<long>(k));
        if (cabs(den) <= ctx.tol()) {
            throw DomainError("harmonic partial sum hits a degenerate term: W_n + k log2 = 0");
        }
        sum = sum - ln2 / den;
    }
    out.partial_sum = sum;
    return out;
}

Complex prime_product_rhs(BranchIndex n, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Real pi = const_pi(ctx);
    const Real ln2 = const_log2(ctx);
    const WValue wv = lambert_w(make_complex(ctx, -ln2), n, ctx);
    return (make_real(ctx, -2) * pi * pi) / (wv.w + ln2);
}

Complex zeta_ratio(const Complex& s_in, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex s = norm_c(ctx, s_in);
    return zeta_functional(-s, ctx) / zeta_dirichlet(s, ctx);
}

Complex zeta_ratio_root(const Complex& s_in, const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    const Complex s = norm_c(ctx, s_in);
    const Complex ratio = zeta_ratio(s, ctx);
    return cexp(clog_principal(ratio, ctx) / s, ctx);
}

}  // namespace geowsum
