#pragma once

#include "dfun/integration.hpp"
#include "dfun/polytope.hpp"

namespace dfun {

struct PolarIdentityResult {
    double integral = 0.0;
    double tail_estimate = 0.0;
    /// n! times the volume of the polar body.
    double expected = 0.0;
    double ratio = 0.0;
};

/// Integrates e^{-h_P} over the centered cube [-half_width, half_width]^n with
/// nodes per axis and divides by n! V(P*). Throws std::domain_error unless the
/// origin is interior to P.
PolarIdentityResult polar_identity_check(const Polytope& p, double half_width, std::size_t nodes);

} // namespace dfun
