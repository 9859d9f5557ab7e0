#include "doctest.h"

#include "geowsum/complex_hp.hpp"

#include "test_support.hpp"

#include <random>

using geowsum::cabs;
using geowsum::cexp;
using geowsum::clog_principal;
using geowsum::Complex;
using geowsum::conj;
using geowsum::cpow_principal;
using geowsum::csin;
using geowsum::csqrt_principal;
using geowsum::DomainError;
using geowsum::make_complex;
using geowsum::make_context;
using geowsum::make_real;
using geowsum::PrecisionContext;
using geowsum::Real;
using geowsum::ScopedWorkingPrecision;
using tsup::below;
using tsup::cbelow;
using tsup::cdist;

namespace {
PrecisionContext ctx60() { return make_context(60); }
}  // namespace

TEST_CASE("arithmetic and accessors") {
    PrecisionContext ctx = ctx60();
    ScopedWorkingPrecision guard(ctx);
    Complex a = make_complex(ctx, 3, 4);
    Complex b = make_complex(ctx, -1, 2);

    CHECK(cabs(a) == make_real(ctx, 5));
    CHECK(geowsum::abs2(a) == make_real(ctx, 25));
    CHECK((a + b).re == make_real(ctx, 2));
    CHECK((a - b).im == make_real(ctx, 2));
    Complex p = a * b;  // (3+4i)(-1+2i) = -11 + 2i
    CHECK(p.re == make_real(ctx, -11));
    CHECK(p.im == make_real(ctx, 2));
    CHECK(cbelow(p / b, a, -55, ctx));
    CHECK(conj(a).im == make_real(ctx, -4));
    CHECK(geowsum::is_zero(a - a));
    CHECK_FALSE(geowsum::is_zero(a));

    // mixed Complex/Real operators
    Real two = make_real(ctx, 2);
    CHECK((a * two).re == make_real(ctx, 6));
    CHECK((two * a).im == make_real(ctx, 8));
    CHECK((a + two).re == make_real(ctx, 5));
    CHECK((a - two).re == make_real(ctx, 1));
    CHECK((two - a).im == make_real(ctx, -4));
    CHECK((a / two).im == make_real(ctx, 2));
    Complex inv_i = two / make_complex(ctx, 0, 2);  // 2/(2i) = -i
    CHECK(inv_i.re.is_zero());
    CHECK(inv_i.im == make_real(ctx, -1));

    CHECK_THROWS_AS(a / make_complex(ctx), DomainError);
}

TEST_CASE("exp, log, sin fundamentals") {
    PrecisionContext ctx = ctx60();
    ScopedWorkingPrecision guard(ctx);
    Real pi = geowsum::const_pi(ctx);

    // Euler: e^(i pi) = -1
    Complex euler = cexp(make_complex(ctx, make_real(ctx), pi), ctx);
    CHECK(cbelow(euler, make_complex(ctx, -1, 0), -55, ctx));

    // Log(-1) = i pi on the upper side of the cut
    Complex logm1 = clog_principal(make_complex(ctx, -1), ctx);
    CHECK(logm1.re.is_zero());
    CHECK(below(abs(logm1.im - pi), -55, ctx));

    // exp(Log z) = z away from the cut
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 15; ++i) {
        Complex z = make_complex(ctx, make_real(ctx) + d(rng), make_real(ctx) + d(rng));
        if (cabs(z) < make_real(ctx, "0.1")) continue;
        CHECK(cbelow(cexp(clog_principal(z, ctx), ctx), z, -54, ctx));
    }

    // principal strip: Im Log in (-pi, pi]
    Complex below_cut = clog_principal(make_complex(ctx, make_real(ctx, -2),
                                                    make_real(ctx, "-1e-50")), ctx);
    CHECK(below_cut.im < 0);  // just under the cut -> near -pi
    Complex on_axis = clog_principal(make_complex(ctx, -2), ctx);
    CHECK(on_axis.im > 0);  // exact negative reals land on the upper side

    // sin of a real stays exactly real
    Complex s3 = csin(make_complex(ctx, 3), ctx);
    CHECK(s3.im.is_zero());
    Real sin3 = sin(make_real(ctx, 3));
    CHECK(below(abs(s3.re - sin3), -55, ctx));

    // sin(i) = i sinh(1)
    Complex si = csin(make_complex(ctx, 0, 1), ctx);
    CHECK(below(abs(si.re), -55, ctx));
    CHECK(below(abs(si.im - sinh(make_real(ctx, 1))), -55, ctx));
}

TEST_CASE("exact-real propagation through arithmetic chains") {
    PrecisionContext ctx = ctx60();
    ScopedWorkingPrecision guard(ctx);
    Complex a = make_complex(ctx, 2);
    Complex b = make_complex(ctx, 3);
    Complex c = make_complex(ctx, 7);
    Complex chain = (a * b / c + a - b) * c;
    CHECK(chain.im.is_zero());
    Complex e2 = cexp(make_complex(ctx, 2), ctx);
    CHECK(e2.im.is_zero());
}

TEST_CASE("powers and square roots") {
    PrecisionContext ctx = ctx60();
    ScopedWorkingPrecision guard(ctx);
    Complex z = make_complex(ctx, 2, -5);

    CHECK(cbelow(cpow_principal(z, make_complex(ctx, 1), ctx), z, -54, ctx));
    CHECK(cbelow(cpow_principal(z, make_complex(ctx), ctx), make_complex(ctx, 1), -58, ctx));
    CHECK(geowsum::is_zero(cpow_principal(make_complex(ctx), make_complex(ctx, 2), ctx)));
    CHECK_THROWS_AS(cpow_principal(make_complex(ctx), make_complex(ctx, -1), ctx), DomainError);
    CHECK_THROWS_AS(cpow_principal(make_complex(ctx), make_complex(ctx, 1, 1), ctx), DomainError);

    // 2^10 = 1024 through the principal power
    CHECK(cbelow(cpow_principal(make_complex(ctx, 2), make_complex(ctx, 10), ctx),
                 make_complex(ctx, 1024), -52, ctx));

    Complex r = csqrt_principal(make_complex(ctx, -4), ctx);
    CHECK(below(abs(r.re), -55, ctx));
    CHECK(below(abs(r.im - 2), -55, ctx));

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int i = 0; i < 15; ++i) {
        Complex w = make_complex(ctx, make_real(ctx) + d(rng), make_real(ctx) + d(rng));
        Complex s = csqrt_principal(w, ctx);
        CHECK(cbelow(s * s, w, -53, ctx));
        CHECK(s.re >= 0);  // principal half-plane
    }
}
