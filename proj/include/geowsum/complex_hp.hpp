#pragma once

#include "geowsum/precision.hpp"

namespace geowsum {

// Arbitrary-precision complex value. Both parts always carry the same
// precision; construct through make_complex or the arithmetic below.
struct Complex {
    Real re;
    Real im;
};

Complex make_complex(const PrecisionContext& ctx);
Complex make_complex(const PrecisionContext& ctx, const Real& re);
Complex make_complex(const PrecisionContext& ctx, const Real& re, const Real& im);
Complex make_complex(const PrecisionContext& ctx, long re, long im = 0);

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);

Complex operator+(const Complex& a, const Real& b);
Complex operator+(const Real& a, const Complex& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator/(const Real& a, const Complex& b);

bool is_zero(const Complex& z);
Complex conj(const Complex& z);
Real abs2(const Complex& z);   // |z|^2
Real cabs(const Complex& z);   // |z|

Complex cexp(const Complex& z, const PrecisionContext& ctx);

// Principal logarithm, Im in (-pi, pi]. A zero imaginary part is treated as
// +0 so negative real arguments land on the upper side of the cut.
Complex clog_principal(const Complex& z, const PrecisionContext& ctx);

// exp(e * Log b). b = 0 allowed only for real e with Re(e) > 0 (gives 0).
Complex cpow_principal(const Complex& b, const Complex& e, const PrecisionContext& ctx);

Complex csqrt_principal(const Complex& z, const PrecisionContext& ctx);
Complex csin(const Complex& z, const PrecisionContext& ctx);

}  // namespace geowsum
