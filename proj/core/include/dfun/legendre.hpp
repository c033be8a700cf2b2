#pragma once

#include "dfun/box_domain.hpp"

#include <span>
#include <vector>

namespace dfun {

/// Discrete conjugate v*(p) = max_x <p, x> - v(x) on a dual (slope) grid.
struct ConjugateGrid {
    BoxDomain dual;
    std::vector<double> values;
};

/// One-dimensional conjugate c(p) = max_j p x_j - w_j for ascending x and p.
/// Nodes with w = +inf are skipped; an all-skipped line yields -inf, and a
/// node with w = -inf makes every output +inf. Runs in O(|x| + |p|) through
/// the lower convex hull of the points (x_j, w_j).
void conjugate_line(std::span<const double> x, std::span<const double> w, std::span<const double> p,
                    std::span<double> out);

/// Tensor-grid conjugate out(p) = max_x <p, x> - v(x), computed as a sequence
/// of one-dimensional transforms, one axis at a time.
std::vector<double> conjugate_tensor(const BoxDomain& primal, std::span<const double> v, const BoxDomain& dual);

/// Throws std::invalid_argument when v has no finite node.
ConjugateGrid legendre(std::span<const double> v, const BoxDomain& domain, const BoxDomain& dual);

/// Nonnegative second differences along every grid line (up to tol).
bool is_grid_convex(const BoxDomain& domain, std::span<const double> v, double tol);

/// Per-axis [min, max] of finite forward-difference slopes, with count
/// 2N+1; flat ranges are widened by one.
BoxDomain slope_domain(const BoxDomain& domain, std::span<const double> v);

/// Largest finite forward-difference slope magnitude over all axes.
double grid_lipschitz(const BoxDomain& domain, std::span<const double> v);

/// max |v**(x) - v(x)| over interior nodes where v is finite, with the dual
/// grid from slope_domain().
double legendre_involution_gap(std::span<const double> v, const BoxDomain& domain);

struct DualGridSpec {
    /// Dual half-width as a multiple of grid_lipschitz(); the Lipschitz slope
    /// itself is always a dual node.
    int margin = 2;
    /// Nodes per dual axis; 0 picks 2N+1 (N+1 in 3-D), rounded so the
    /// Lipschitz slope lands on a node.
    std::size_t count = 0;
};

BoxDomain symmetric_dual(const BoxDomain& domain, std::span<const double> v, const DualGridSpec& spec);

/// w(z) = inf { (u(x) + u(-y)) / 2 : (x + y) / 2 = z } evaluated on out through
/// w(z) = psi(2z) / 2, psi = (u* + u*(-.))*. Exact for convex u up to the dual
/// grid resolution.
std::vector<double> half_inf_convolution_conjugate(const BoxDomain& domain, std::span<const double> u,
                                                   const BoxDomain& out, const DualGridSpec& spec = {});

} // namespace dfun
