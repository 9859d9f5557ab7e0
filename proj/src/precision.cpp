#include "geowsum/precision.hpp"

namespace geowsum {

Real PrecisionContext::tol() const {
    ScopedWorkingPrecision guard(*this);
    Real t = make_real(*this, 10);
    return pow(t, -static_cast<int>(digits) + 5);
}

PrecisionContext make_context(unsigned digits) {
    if (digits < 30) {
        throw DomainError("precision context requires at least 30 digits, got " +
                          std::to_string(digits) +
                          "; reference tables cannot be checked below 30");
    }
    return PrecisionContext{digits, 20};
}

Real make_real(const PrecisionContext& ctx) {
    Real r(0);
    r.precision(ctx.working_digits());
    r = 0;
    return r;
}

Real make_real(const PrecisionContext& ctx, long v) {
    Real r = make_real(ctx);
    r = v;
    return r;
}

Real make_real(const PrecisionContext& ctx, const char* decimal) {
    Real r = make_real(ctx);
    r.assign(decimal);
    return r;
}

Real to_working(const PrecisionContext& ctx, const Real& x) {
    Real r = make_real(ctx);
    r = x;
    return r;
}

ScopedWorkingPrecision::ScopedWorkingPrecision(const PrecisionContext& ctx)
    : saved_(Real::default_precision()) {
    Real::default_precision(ctx.working_digits());
}

ScopedWorkingPrecision::~ScopedWorkingPrecision() { Real::default_precision(saved_); }

Real const_log2(const PrecisionContext& ctx) {
    Real r = make_real(ctx);
    mpfr_const_log2(r.backend().data(), MPFR_RNDN);
    return r;
}

Real const_pi(const PrecisionContext& ctx) {
    Real r = make_real(ctx);
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real const_e(const PrecisionContext& ctx) {
    Real one = make_real(ctx, 1);
    return exp(one);
}

}  // namespace geowsum
