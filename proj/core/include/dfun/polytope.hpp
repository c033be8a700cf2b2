#pragma once

#include "dfun/box_domain.hpp"

#include <span>
#include <vector>

namespace dfun {

/// Closed halfspace <normal, x> <= offset with a unit normal.
struct Halfspace {
    Point normal{};
    double offset = 0.0;
};

/// A convex polytope in R^n, n in {1, 2, 3}, stored by its extreme points.
///
/// Normalized vertex order: 1-D {min, max}; 2-D counter-clockwise starting at
/// the lexicographically smallest vertex; 3-D lexicographic. A body without
/// interior is kept as "degenerate": its volume is 0 and operations that need
/// an interior throw.
class Polytope {
public:
    Polytope() = default;

    int dim() const { return dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    bool degenerate() const { return degenerate_; }
    /// Outward triangles of the boundary (3-D only), indices into vertices().
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    /// Facet halfspaces, one per facet (coplanar triangles merged).
    std::vector<Halfspace> facets() const;
    bool contains(const Point& p, double eps = 1e-12) const;
    double diameter_scale() const;

    friend Polytope convex_hull(int dim, std::span<const Point> points);

private:
    int dim_ = 0;
    bool degenerate_ = true;
    std::vector<Point> vertices_;
    std::vector<std::array<int, 3>> triangles_;
};

/// Extreme points of the hull of a nonempty point set (monotone chain in 2-D,
/// incremental hull in 3-D). Throws std::invalid_argument on an empty input.
Polytope convex_hull(int dim, std::span<const Point> points);
Polytope convex_hull(int dim, const std::vector<Point>& points);

/// P + Q; throws on a dimension mismatch.
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
/// x - P.
Polytope reflect_body(const Polytope& p, const Point& x);
/// DP = P + (-P).
Polytope difference_body(const Polytope& p);
/// co(P u (x - P)).
Polytope hull_union_reflection(const Polytope& p, const Point& x);
/// P n Q by sequential halfspace clipping of P's bounding box.
Polytope intersection(const Polytope& p, const Polytope& q);

/// Exact n-dimensional volume; 0 for degenerate bodies.
double volume(const Polytope& p);
double support_function(const Polytope& p, const Point& u);

/// Polar body with respect to the origin. Throws std::domain_error unless the
/// origin is strictly interior.
Polytope polar(const Polytope& p);

struct DualityCheck {
    bool match = false;
    /// Largest distance between nearest-neighbour paired vertices.
    double max_vertex_distance = 0.0;
};

/// Compares (P n (-P))* against co(P* u (-P*)) vertex by vertex.
DualityCheck hull_duality_check(const Polytope& p, double tol = 1e-9);

double binomial(int n, int k);
double factorial(int n);

} // namespace dfun
