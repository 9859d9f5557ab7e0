#pragma once

#include <string>

#include "geowsum/complex_hp.hpp"
#include "geowsum/precision.hpp"

namespace geowsum {

// Decimal rendering at `digits` significant figures, round-half-even.
// Positional notation for moderate exponents, otherwise d.ddd...e+XX.
std::string format_real(const Real& x, unsigned digits);

// "<re> + <im>i" / "<re> - <im>i" with both parts at `digits` figures.
std::string format_complex(const Complex& z, unsigned digits);

// Parses a decimal string at working precision. Also accepts the symbolic
// constants pi, e, log2, sqrt2 (optionally sign-prefixed).
Real parse_real(const std::string& text, const PrecisionContext& ctx);

// Accepts "<re>", "<re>+<im>i", "<re>-<im>i" (spaces allowed), with each
// component in parse_real syntax, or "i"/"-i" for unit imaginary parts.
Complex parse_complex(const std::string& text, const PrecisionContext& ctx);

// Sign and first `digits` significant decimal digits, truncated toward zero,
// plus the decimal exponent (value = 0.digits * 10^exp10). is_zero marks an
// exact zero. This is the comparison currency for golden manifests.
struct DigitParts {
    bool negative = false;
    bool zero = false;
    std::string digits;
    long exp10 = 0;
};

DigitParts truncate_digits(const Real& x, unsigned digits);

}  // namespace geowsum
