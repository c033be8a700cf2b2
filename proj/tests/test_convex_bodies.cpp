#include "doctest.h"

#include "dfun/polar_identity.hpp"
#include "dfun/polytope.hpp"
#include "dfun/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace dfun;

namespace {

bool same_point(const Point& a, const Point& b, double eps = 1e-9) {
    return std::abs(a[0] - b[0]) <= eps && std::abs(a[1] - b[1]) <= eps && std::abs(a[2] - b[2]) <= eps;
}

bool has_vertex(const Polytope& p, const Point& v) {
    return std::any_of(p.vertices().begin(), p.vertices().end(), [&](const Point& w) { return same_point(v, w); });
}

// p is extreme iff some direction on a fine sphere sample makes it the
// unique maximiser (adequate for the small random sets used here)
std::vector<Point> brute_extreme_points_2d(const std::vector<Point>& pts) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        bool extreme = false;
        for (int k = 0; k < 20000 && !extreme; ++k) {
            const double t = 2 * M_PI * k / 20000.0;
            const double ux = std::cos(t), uy = std::sin(t);
            const double hp = ux * p[0] + uy * p[1];
            bool unique = true;
            for (const Point& q : pts)
                if (!same_point(p, q, 0) && ux * q[0] + uy * q[1] >= hp - 1e-12) unique = false;
            extreme = unique;
        }
        if (extreme && !std::any_of(out.begin(), out.end(), [&](const Point& w) { return same_point(p, w, 0); }))
            out.push_back(p);
    }
    return out;
}

double brute_support(const std::vector<Point>& pts, const Point& u) {
    double best = -1e300;
    for (const Point& p : pts) best = std::max(best, u[0] * p[0] + u[1] * p[1] + u[2] * p[2]);
    return best;
}

const Polytope kTriangle = convex_hull(2, std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
const Polytope kTetra = convex_hull(3, std::vector<Point>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
const Polytope kSquare = convex_hull(2, std::vector<Point>{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});

} // namespace

TEST_CASE("hull examples") {
    const Polytope seg = convex_hull(1, std::vector<Point>{{3}, {-1}, {0.5}});
    CHECK(seg.vertices() == std::vector<Point>{{-1}, {3}});
    const Polytope sq = convex_hull(2, std::vector<Point>{{1, 1}, {0, 0}, {0.5, 0.5}, {1, 0}, {0, 1}, {0.5, 0}});
    CHECK(sq.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    std::vector<Point> cube;
    for (int m = 0; m < 8; ++m) cube.push_back({double(m & 1), double((m >> 1) & 1), double((m >> 2) & 1)});
    cube.push_back({0.5, 0.5, 0.5});
    cube.push_back({0.5, 0.5, 1.0});
    const Polytope c = convex_hull(3, cube);
    CHECK(c.vertices().size() == 8);
    CHECK(c.facets().size() == 6);
    CHECK(volume(c) == doctest::Approx(1.0).epsilon(1e-14));
    const Polytope flat = convex_hull(2, std::vector<Point>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(flat.degenerate());
    CHECK(volume(flat) == 0.0);
    CHECK_THROWS_AS(convex_hull(2, std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("hull matches a brute-force extreme-point oracle") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CounterRng rng(seed);
        std::vector<Point> pts(12);
        for (Point& p : pts) p = {rng.uniform(-1, 1), rng.uniform(-1, 1), 0};
        const Polytope h = convex_hull(2, pts);
        const std::vector<Point> ext = brute_extreme_points_2d(pts);
        CHECK(h.vertices().size() == ext.size());
        for (const Point& e : ext) CHECK(has_vertex(h, e));
        for (const Point& p : pts) CHECK(h.contains(p, 1e-12));
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CounterRng rng(seed + 50);
        std::vector<Point> pts(20);
        for (Point& p : pts) p = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Polytope h = convex_hull(3, pts);
        for (const Point& p : pts) CHECK(h.contains(p, 1e-12));
        // every vertex is an input point and support values agree with the raw set
        for (const Point& v : h.vertices())
            CHECK(std::any_of(pts.begin(), pts.end(), [&](const Point& q) { return same_point(v, q, 0); }));
        for (int k = 0; k < 50; ++k) {
            const Point u{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            CHECK(support_function(h, u) == doctest::Approx(brute_support(pts, u)).epsilon(1e-12));
        }
    }
}

TEST_CASE("volumes") {
    CHECK(volume(kTriangle) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(volume(kTetra) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(volume(convex_hull(1, std::vector<Point>{{-1}, {2}})) == 3.0);
    const Polytope oct = convex_hull(3, std::vector<Point>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    CHECK(volume(oct) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(binomial(6, 3) == 20.0);
    CHECK(factorial(4) == 24.0);
}

TEST_CASE("Minkowski sums and difference bodies") {
    const Polytope dt = difference_body(kTriangle);
    CHECK(dt.vertices().size() == 6);
    CHECK(volume(dt) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(volume(difference_body(kTetra)) / volume(kTetra) == doctest::Approx(20.0).epsilon(1e-12));
    const Polytope s2 = minkowski_sum(kSquare, kSquare);
    CHECK(volume(s2) == doctest::Approx(16.0).epsilon(1e-14));
    CHECK_THROWS_AS(minkowski_sum(kSquare, kTetra), std::invalid_argument);
    const Polytope r = reflect_body(kTriangle, Point{1, 1});
    CHECK(has_vertex(r, Point{1, 1}));
    CHECK(has_vertex(r, Point{0, 1}));
    CHECK(has_vertex(r, Point{1, 0}));
    const Polytope hu = hull_union_reflection(kTriangle, Point{0, 0});
    CHECK(volume(hu) == doctest::Approx(2.0).epsilon(1e-14));
    // support functions add
    CounterRng rng(4);
    for (int k = 0; k < 20; ++k) {
        const Point u{rng.uniform(-1, 1), rng.uniform(-1, 1), 0};
        CHECK(support_function(dt, u) == doctest::Approx(support_function(kTriangle, u) + support_function(kTriangle, Point{-u[0], -u[1], 0})));
    }
}

TEST_CASE("intersection") {
    const Polytope shifted = convex_hull(2, std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    const Polytope i = intersection(kSquare, shifted);
    CHECK(volume(i) == doctest::Approx(1.0).epsilon(1e-14));
    const Polytope sym = intersection(kTriangle, reflect_body(kTriangle, Point{}));
    CHECK(sym.degenerate());
}

TEST_CASE("polar bodies") {
    const Polytope ps = polar(kSquare);
    CHECK(ps.vertices().size() == 4);
    CHECK(has_vertex(ps, Point{1, 0}));
    CHECK(volume(ps) == doctest::Approx(2.0).epsilon(1e-14));
    const Polytope seg = polar(convex_hull(1, std::vector<Point>{{-1}, {2}}));
    CHECK(seg.vertices()[0][0] == doctest::Approx(-1.0));
    CHECK(seg.vertices()[1][0] == doctest::Approx(0.5));
    std::vector<Point> cube;
    for (int m = 0; m < 8; ++m) cube.push_back({(m & 1) ? 1.0 : -1.0, (m & 2) ? 1.0 : -1.0, (m & 4) ? 1.0 : -1.0});
    CHECK(volume(polar(convex_hull(3, cube))) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(polar(kTriangle), std::domain_error);
    // polar of polar is the body
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Polytope p = generate_random_centered_polytope(seed, 2, 7);
        const Polytope pp = polar(polar(p));
        CHECK(pp.vertices().size() == p.vertices().size());
        for (const Point& v : p.vertices()) CHECK(has_vertex(pp, v));
    }
}

TEST_CASE("hull duality") {
    CHECK(hull_duality_check(kSquare).match);
    CHECK(hull_duality_check(convex_hull(2, std::vector<Point>{{-1, -1}, {2, -1}, {-1, 2}})).match);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const DualityCheck c = hull_duality_check(generate_random_centered_polytope(seed, 2, 6));
        CHECK(c.match);
        CHECK(c.max_vertex_distance <= 1e-9);
    }
    const DualityCheck c3 = hull_duality_check(generate_random_centered_polytope(3, 3, 10));
    CHECK(c3.match);
}

TEST_CASE("volume ratios are affine invariant") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CounterRng rng(seed);
        const Polytope p = generate_random_polytope(seed, 2, 7);
        const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2), c = rng.uniform(-2, 2), d = rng.uniform(-2, 2);
        const double det = a * d - b * c;
        if (std::abs(det) < 0.1) continue;
        std::vector<Point> img;
        for (const Point& v : p.vertices()) img.push_back({a * v[0] + b * v[1] + 3, c * v[0] + d * v[1] - 1, 0});
        const Polytope q = convex_hull(2, img);
        CHECK(volume(q) == doctest::Approx(std::abs(det) * volume(p)).epsilon(1e-12));
        const double rp = volume(difference_body(p)) / volume(p), rq = volume(difference_body(q)) / volume(q);
        CHECK(rq == doctest::Approx(rp).epsilon(1e-10));
        CHECK(rp >= 4.0 - 1e-12);
        CHECK(rp <= 6.0 + 1e-12);
    }
}

TEST_CASE("hull union of a body and its reflection") {
    // x at the origin vertex: K u (-K) spans the diamond |x| + |y| <= 1
    CHECK(volume(hull_union_reflection(kTriangle, Point{})) / volume(kTriangle) == doctest::Approx(4.0).epsilon(1e-12));
    // x = (1, 0): x - K is K reflected through (1/2, 0), giving a parallelogram of area 1
    CHECK(volume(hull_union_reflection(kTriangle, Point{1, 0})) == doctest::Approx(1.0).epsilon(1e-12));
    CounterRng rng(9);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Polytope p = generate_random_centered_polytope(seed, 2, 3 + seed % 6);
        const Point x = random_interior_point(rng, p);
        CHECK(p.contains(x));
        CHECK(volume(hull_union_reflection(p, x)) <= 4.0 * volume(p) * (1 + 1e-12));
    }
}

TEST_CASE("polar identity on a square") {
    const PolarIdentityResult r = polar_identity_check(kSquare, 20.0, 801);
    CHECK(r.expected == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(0.02));
    CHECK_THROWS_AS(polar_identity_check(kTriangle, 10.0, 101), std::domain_error);
}

TEST_CASE("convex body examples") {
    const Polytope unit = convex_hull(1, std::vector<Point>{{0}, {1}});
    const Polytope two = minkowski_sum(unit, unit);
    CHECK(two.vertices() == std::vector<Point>{{0}, {2}});
    CHECK(volume(difference_body(unit)) == 2.0);
    const Polytope moved = minkowski_sum(kTriangle, convex_hull(2, std::vector<Point>{{0.5, -2}}));
    CHECK(moved.vertices().size() == 3);
    CHECK(has_vertex(moved, Point{0.5, -2}));
    CHECK(has_vertex(moved, Point{1.5, -2}));
    CHECK(has_vertex(moved, Point{0.5, -1}));
    // symmetric bodies: DP = 2P
    const Polytope hex = difference_body(kTriangle);
    CHECK(volume(difference_body(hex)) == doctest::Approx(4.0 * volume(hex)).epsilon(1e-14));
    CHECK(volume(hex) == doctest::Approx(3.0 * 2 * volume(kTriangle)).epsilon(1e-14));
    CHECK(volume(convex_hull(2, std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 1.0);

    CHECK(support_function(kSquare, Point{1, 0}) == 1.0);
    CHECK(support_function(kSquare, Point{1, 1}) == 2.0);
    CHECK(support_function(kTriangle, Point{1, 1}) == 1.0);

    const Polytope pp = polar(polar(kSquare));
    for (const Point& v : kSquare.vertices()) CHECK(has_vertex(pp, v));
    CHECK(has_vertex(polar(kSquare), Point{0, -1}));

    CHECK(volume(hull_union_reflection(kSquare, Point{})) == doctest::Approx(volume(kSquare)));
    CHECK(hull_union_reflection(unit, Point{1}).vertices() == std::vector<Point>{{0}, {1}});
    CHECK(hull_duality_check(convex_hull(1, std::vector<Point>{{-1}, {2}})).match);
}

TEST_CASE("hull of random points in a disk") {
    CounterRng rng(21);
    std::vector<Point> disk, circle;
    for (int k = 0; k < 50; ++k) {
        const double t = rng.uniform(0, 2 * M_PI), r = std::sqrt(rng.uniform());
        disk.push_back({r * std::cos(t), r * std::sin(t), 0});
        circle.push_back({std::cos(t), std::sin(t), 0});
    }
    const Polytope h = convex_hull(2, disk);
    const std::vector<Point> ext = brute_extreme_points_2d(disk);
    CHECK(ext.size() == h.vertices().size());
    for (const Point& e : ext) CHECK(has_vertex(h, e));
    const Polytope c = convex_hull(2, circle);
    CHECK(c.vertices().size() == 50);
    for (const Point& v : c.vertices()) CHECK(std::hypot(v[0], v[1]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polar identity examples") {
    const PolarIdentityResult seg = polar_identity_check(convex_hull(1, std::vector<Point>{{-1}, {1}}), 20.0, 4001);
    CHECK(seg.expected == doctest::Approx(2.0));
    CHECK(seg.ratio == doctest::Approx(1.0).epsilon(0.01));
    std::vector<Point> cube;
    for (int m = 0; m < 8; ++m) cube.push_back({(m & 1) ? 1.0 : -1.0, (m & 2) ? 1.0 : -1.0, (m & 4) ? 1.0 : -1.0});
    const PolarIdentityResult c = polar_identity_check(convex_hull(3, cube), 16.0, 193);
    CHECK(c.expected == doctest::Approx(8.0));
    CHECK(c.ratio == doctest::Approx(1.0).epsilon(0.03));
}
