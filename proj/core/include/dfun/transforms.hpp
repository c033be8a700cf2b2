#pragma once

#include "dfun/grid_function.hpp"
#include "dfun/legendre.hpp"

#include <optional>
#include <span>
#include <vector>

namespace dfun {

enum class Route { Direct, Conjugate, LevelSet };

const char* route_name(Route r);

/// Centered box with the input's per-axis half-width and node count. When the
/// input is centered or the node count is odd every pair x, x - 2z lands on
/// nodes exactly.
BoxDomain difference_domain(const BoxDomain& in);

/// Same box with half the spacing (2N-1 nodes per axis): every offset
/// x - 2z is then a whole number of input cells, so no pair is skipped.
BoxDomain fine_difference_domain(const BoxDomain& in);

/// w(z) = min (v0(x) + v1(y)) / 2 over node pairs with |x + y - 2z| <= h/2 on
/// every axis (h the finer input spacing); +inf where no pair qualifies.
std::vector<double> inf_convolution_brute(std::span<const double> v0, const BoxDomain& d0,
                                          std::span<const double> v1, const BoxDomain& d1, const BoxDomain& out);

/// inf_convolution_brute of v and v(-.) on difference_domain(domain).
std::vector<double> delta_v(std::span<const double> v, const BoxDomain& domain);

struct DifferenceOptions {
    /// Output grid; difference_domain() of the input when empty.
    std::optional<BoxDomain> output;
    DualGridSpec dual;
    std::size_t levels = 64;
    double level_floor = 1e-6;
};

/// Difference function of order alpha,
///   Delta f(z) = max_x M_alpha(f(x), f(x - 2z); 1/2),
/// by one of three independent routes. Throws std::invalid_argument for
/// LevelSet with alpha != -inf and for Conjugate with alpha = -inf.
GridFunction difference_function(const GridFunction& f, AlphaParam alpha, Route route,
                                  const DifferenceOptions& opts = {});

/// Per-axis offsets o_j with x_i - 2 z_j snapped to node i + o_j.
std::vector<long> pairing_offsets(const Axis& in, const Axis& out);

/// Direct route on the closed superlevel sets {f >= s_k}; exposed for the
/// rearrangement checks. levels must be decreasing.
std::vector<double> level_set_difference(const GridFunction& f, const BoxDomain& out, std::span<const double> levels);

/// Level grid used by the LevelSet route: geometric from the largest finite
/// value, preceded by +inf when f has infinite nodes.
std::vector<double> difference_levels(const GridFunction& f, std::size_t count, double floor_ratio);

ConcavityResult check_alpha_concavity_of_delta(const GridFunction& f, AlphaParam alpha, double tol = 1e-9);

} // namespace dfun
