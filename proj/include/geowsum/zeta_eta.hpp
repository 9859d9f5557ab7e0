#pragma once

#include "geowsum/branch_sums.hpp"

namespace geowsum {

// Branch-indexed eta/zeta correction factors: `exact` is the branch bracket,
// `classic` the textbook 1 - 2^(1-s); they coincide as |branch| grows.
struct EtaFactorPair {
    Complex exact;
    Complex classic;
    BranchIndex branch;
};

struct HarmonicPartial {
    Complex partial_sum;  // K leading terms of -log2/(W_n + k log2)
    Complex companion;    // 2 + 2 W_n(-log 2)/log 2
};

// Dirichlet series route, Re(s) > 1.1 only. Moderate real parts run through
// an Euler-Maclaurin tail (the raw series cannot reach the digit target
// there); large real parts use the plain truncated sum with an
// integral-test bound.
Complex zeta_dirichlet(const Complex& s, const PrecisionContext& ctx);

// Gamma via exact factorials at positive integers, elsewhere an
// argument-shifted Stirling series sized from the working precision.
Complex gamma_hp(const Complex& s, const PrecisionContext& ctx);

// Functional-equation route, Re(s) < 0 only:
// 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s).
// Integer s resolve the sine factor symbolically, so negative even integers
// return exactly 0 and real arguments stay exactly real.
Complex zeta_functional(const Complex& s, const PrecisionContext& ctx);

// Requires Re(s) > 0 and 2^(delta s) != 1. Also cross-validates an
// algebraically rearranged form of `exact` internally.
EtaFactorPair eta_factor(const Complex& s, BranchIndex n, const PrecisionContext& ctx);

bool is_prime(unsigned long p);

// -p^(s(1-delta))/(p^s - 1): the branch-dependent gap between the
// geometric prime factor and its classical value p^s/(p^s - 1).
Complex euler_error_term(unsigned long p, const Complex& s, BranchIndex n,
                         const PrecisionContext& ctx);

// -2 (log2 + W_n(-log 2)).
Complex harmonic_branch(BranchIndex n, const PrecisionContext& ctx);

HarmonicPartial harmonic_reciprocal_sum(BranchIndex n, unsigned K, const PrecisionContext& ctx);

// -2 pi^2 / (log2 + W_n(-log 2)).
Complex prime_product_rhs(BranchIndex n, const PrecisionContext& ctx);

// zeta(-s)/zeta(s) for Re(s) > 1.1 (left side via the functional equation).
Complex zeta_ratio(const Complex& s, const PrecisionContext& ctx);

// Principal s-th root exp(Log(zeta(-s)/zeta(s))/s).
Complex zeta_ratio_root(const Complex& s, const PrecisionContext& ctx);

}  // namespace geowsum
