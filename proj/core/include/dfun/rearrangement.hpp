#pragma once

#include "dfun/grid_function.hpp"

#include <array>
#include <string>

namespace dfun {

/// f*(z) = max_x min(f(x), f(x - z)) for z >= 0 and 0 for z < 0, on the
/// symmetric grid [-(N-1)h, (N-1)h] with the input spacing (2N-1 nodes), so
/// the output reaches twice the width of any superlevel set.
/// Throws std::invalid_argument unless f is one-dimensional.
GridFunction star_rearrangement(const GridFunction& f);

struct PropertyCheck {
    bool pass = false;
    double gap = 0.0;
    double tolerance = 0.0;
};

/// The six properties of the rearrangement, in order:
///   0 f* is alpha-concave
///   1 |{f* > s}| = |{f > s}| on a level grid
///   2 integral of f* equals integral of f
///   3 f* is nonincreasing on [0, inf)
///   4 Delta f*(z) = M_alpha(f*(0), f*(2|z|); 1/2)
///   5 Delta f*(z) >= Delta f(z)
/// plus the three ratios of the chain
///   int Delta f / int f <= int Delta f* / int f* = 2 int_0^inf M(f*(0), f*(2x)) / int_0^inf f*.
struct RearrangementReport {
    std::array<PropertyCheck, 6> properties{};
    double ratio_f = 0.0;
    double ratio_star = 0.0;
    double ratio_formula = 0.0;
    bool all_pass() const;
    static const char* property_name(std::size_t i);
};

struct RearrangementTolerances {
    /// Midpoint-concavity slack in cells times the largest finite slope of f;
    /// grid maxima miss the continuous ones by at most half a cell of slope.
    double concavity_cells = 1.0;
    /// Measure slack in cells.
    double measure_cells = 1.0;
    /// Integral slack in cells times the largest finite value.
    double integral_cells = 2.0;
    /// Relative slack for the nodewise identities (v) and (vi).
    double nodewise = 1e-12;
};

RearrangementReport check_rearrangement(const GridFunction& f, AlphaParam alpha,
                                        const RearrangementTolerances& tol = {});

} // namespace dfun
