#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace geowsum {

using Real = boost::multiprecision::mpfr_float;

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Extra internal digits beyond digits+guard_digits. Sized so that branch
// indices up to |n| = 10^12 keep full accuracy through the trig argument
// reduction of exp at Im(w) ~ 2*pi*n, and kept CONSTANT so that every
// operation under one context runs at one working precision (the backing
// library routes all results through a process-global default-precision
// value; equal-precision concurrent use keeps every store of that value
// identical and therefore benign).
inline constexpr unsigned kUniformGuard = 18;

struct PrecisionContext {
    unsigned digits;        // significant decimal digits of results
    unsigned guard_digits;  // extra digits absorbing iteration/quadrature loss

    unsigned working_digits() const { return digits + guard_digits + kUniformGuard; }

    // 10^(-digits+5), recomputed on demand so it can never go stale.
    Real tol() const;
};

// digits < 30 is rejected: reference tables cannot be checked below that.
PrecisionContext make_context(unsigned digits);

// Fresh zero value carrying the context's working precision.
Real make_real(const PrecisionContext& ctx);
Real make_real(const PrecisionContext& ctx, long v);
Real make_real(const PrecisionContext& ctx, const char* decimal);

// Round/extend a value to the context's working precision. Every public
// operation normalizes its inputs this way so all downstream temporaries
// inherit one uniform precision.
Real to_working(const PrecisionContext& ctx, const Real& x);

// Sets the process default precision for the scope. Nested scopes at the
// same working precision are no-ops in effect; mixing different precisions
// across threads concurrently is not supported (see kUniformGuard note).
class ScopedWorkingPrecision {
  public:
    explicit ScopedWorkingPrecision(const PrecisionContext& ctx);
    ~ScopedWorkingPrecision();
    ScopedWorkingPrecision(const ScopedWorkingPrecision&) = delete;
    ScopedWorkingPrecision& operator=(const ScopedWorkingPrecision&) = delete;

  private:
    unsigned saved_;
};

Real const_log2(const PrecisionContext& ctx);
Real const_pi(const PrecisionContext& ctx);
Real const_e(const PrecisionContext& ctx);

}  // namespace geowsum
