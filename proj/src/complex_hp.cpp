#include "geowsum/complex_hp.hpp"

namespace geowsum {

Complex make_complex(const PrecisionContext& ctx) {
    return Complex{make_real(ctx), make_real(ctx)};
}

Complex make_complex(const PrecisionContext& ctx, const Real& re) {
    return Complex{to_working(ctx, re), make_real(ctx)};
}

Complex make_complex(const PrecisionContext& ctx, const Real& re, const Real& im) {
    return Complex{to_working(ctx, re), to_working(ctx, im)};
}

Complex make_complex(const PrecisionContext& ctx, long re, long im) {
    return Complex{make_real(ctx, re), make_real(ctx, im)};
}

Complex operator+(const Complex& a, const Complex& b) {
    return Complex{a.re + b.re, a.im + b.im};
}

Complex operator-(const Complex& a, const Complex& b) {
    return Complex{a.re - b.re, a.im - b.im};
}

Complex operator-(const Complex& a) { return Complex{-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return Complex{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw DomainError("division by zero");
    return Complex{(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator+(const Complex& a, const Real& b) { return Complex{a.re + b, a.im}; }
Complex operator+(const Real& a, const Complex& b) { return b + a; }
Complex operator-(const Complex& a, const Real& b) { return Complex{a.re - b, a.im}; }
Complex operator-(const Real& a, const Complex& b) { return Complex{a - b.re, -b.im}; }
Complex operator*(const Complex& a, const Real& b) { return Complex{a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator/(const Complex& a, const Real& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Complex{a.re / b, a.im / b};
}

Complex operator/(const Real& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw DomainError("division by zero");
    return Complex{a * b.re / d, -a * b.im / d};
}

bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }

Complex conj(const Complex& z) { return Complex{z.re, -z.im}; }

Real abs2(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real cabs(const Complex& z) {
    Real r = z.re;  // carries operand precision
    mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return r;
}

Complex cexp(const Complex& z, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    Real m = exp(z.re);
    Real s = make_real(ctx);
    Real c = make_real(ctx);
    mpfr_sin_cos(s.backend().data(), c.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return Complex{m * c, m * s};
}

Complex clog_principal(const Complex& z, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    if (is_zero(z)) throw DomainError("log of zero");
    Real mag = log(cabs(z));
    Real arg = make_real(ctx);
    if (z.im.is_zero()) {
        // Force +0 so the cut on the negative real axis resolves to +pi.
        Real plus_zero = make_real(ctx);
        mpfr_atan2(arg.backend().data(), plus_zero.backend().data(), z.re.backend().data(),
                   MPFR_RNDN);
    } else {
        mpfr_atan2(arg.backend().data(), z.im.backend().data(), z.re.backend().data(),
                   MPFR_RNDN);
    }
    return Complex{mag, arg};
}

Complex cpow_principal(const Complex& b, const Complex& e, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    if (is_zero(b)) {
        if (e.im.is_zero() && e.re > 0) return make_complex(ctx);
        throw DomainError("0^e defined only for real e with Re(e) > 0");
    }
    if (is_zero(e)) return make_complex(ctx, 1);
    return cexp(e * clog_principal(b, ctx), ctx);
}

Complex csqrt_principal(const Complex& z, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    if (is_zero(z)) return make_complex(ctx);
    Complex lg = clog_principal(z, ctx);
    Real half = make_real(ctx, 1) / 2;
    return cexp(Complex{lg.re * half, lg.im * half}, ctx);
}

Complex csin(const Complex& z, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    Real sr = make_real(ctx), cr = make_real(ctx);
    mpfr_sin_cos(sr.backend().data(), cr.backend().data(), z.re.backend().data(), MPFR_RNDN);
    Real ch = cosh(z.im);
    Real sh = sinh(z.im);
    return Complex{sr * ch, cr * sh};
}

}  // namespace geowsum
