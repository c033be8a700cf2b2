#pragma once

#include "dfun/grid_function.hpp"

#include <span>
#include <vector>

namespace dfun {

struct Integral {
    double value = 0.0;
    /// Heuristic mass beyond the box: boundary value times face area times an
    /// outward decay length (one cell when the function does not decay).
    double tail_estimate = 0.0;
};

/// Cell rule: each cell contributes its volume times the mean of its corner
/// values. A cell touching a +inf node contributes its volume times the largest
/// finite corner value instead. Cells are summed pairwise in a fixed order.
///
/// Throws std::domain_error when two +inf nodes share a cell.
Integral integrate(const GridFunction& f);

/// Boundary tail heuristic used by integrate().
double tail_estimate(const GridFunction& f);

/// Volume of the cells whose centre value (corner mean, +inf if a corner is
/// infinite) exceeds s.
double superlevel_volume(const GridFunction& f, double s);

/// Layer-cake integral over a strictly decreasing list of positive levels,
/// trapezoidal in s, closed by the level s = 0. Positive levels use the
/// closed sets {mean >= s}.
double layer_cake(const GridFunction& f, std::span<const double> levels);

/// count levels top * r^k, r = floor_ratio^(1/(count-1)).
std::vector<double> geometric_levels(double top, std::size_t count = 64, double floor_ratio = 1e-6);

/// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> xs);

} // namespace dfun
