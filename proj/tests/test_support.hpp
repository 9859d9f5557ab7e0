#pragma once

#include "geowsum/complex_hp.hpp"
#include "geowsum/format.hpp"
#include "geowsum/precision.hpp"

#include <string>

namespace tsup {

using geowsum::Complex;
using geowsum::PrecisionContext;
using geowsum::Real;

inline Real cdist(const Complex& a, const Complex& b) { return geowsum::cabs(a - b); }

// x <= 10^exp10, with the bound built textually so tests read like the
// tolerances they assert.
inline bool below(const Real& x, long exp10, const PrecisionContext& ctx) {
    std::string s = "1e" + std::to_string(exp10);
    return x <= geowsum::make_real(ctx, s.c_str());
}

inline bool cbelow(const Complex& a, const Complex& b, long exp10, const PrecisionContext& ctx) {
    return below(cdist(a, b), exp10, ctx);
}

}  // namespace tsup
