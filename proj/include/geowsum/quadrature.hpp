#pragma once

#include "geowsum/complex_hp.hpp"

#include <functional>

namespace geowsum {

enum class QuadScheme { gauss_legendre, tanh_sinh };

struct QuadratureSpec {
    unsigned node_count;  // >= 16
    QuadScheme scheme;
    Real lo;
    Real hi;
};

using ComplexIntegrand = std::function<Complex(const Real&)>;

// Adaptive double-exponential rule on (lo, hi): the step is halved per level
// until two successive estimates agree within target_abs. Endpoint behavior
// (integrable singularities, decaying oscillation) is handled by the node
// clustering; nodes that land exactly on an endpoint are skipped.
Complex tanh_sinh_integrate(const ComplexIntegrand& f, const Real& lo, const Real& hi,
                            const Real& target_abs, const PrecisionContext& ctx,
                            unsigned max_level = 14);

// Fixed-order Gauss-Legendre on [lo, hi]. Nodes and weights are generated on
// each call by Newton refinement of the Legendre roots at working precision.
Complex gauss_legendre_integrate(const ComplexIntegrand& f, const Real& lo, const Real& hi,
                                 unsigned nodes, const PrecisionContext& ctx);

}  // namespace geowsum
