#pragma once

#include "geowsum/complex_hp.hpp"
#include "geowsum/precision.hpp"

namespace geowsum {

// Branch index. Magnitudes up to 10^12 are supported.
using BranchIndex = long long;

struct WValue {
    Complex w;
    Real residual;  // |w e^w - z| achieved
    BranchIndex branch;
};

// Initial iterate for the requested branch: asymptotic L1 - L2 + L2/L1 with
// L1 = Log z + 2*pi*i*n, switching to Taylor/branch-point/log seeds where
// the asymptotic form degenerates.
Complex branch_seed(const Complex& z, BranchIndex n, const PrecisionContext& ctx);

// Solves w e^w = z on branch n by Halley refinement of branch_seed.
// z = 0 is only valid on the principal branch (W_0(0) = 0).
WValue lambert_w(const Complex& z, BranchIndex n, const PrecisionContext& ctx);

}  // namespace geowsum
