#include "dfun/polytope.hpp"

#include "hull3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfun {

using detail::add;
using detail::cross;
using detail::dot;
using detail::sub;

namespace {

double scale_of(std::span<const Point> pts) {
    double s = 0.0;
    for (const Point& p : pts) s = std::max({s, std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
    return std::max(s, 1e-300);
}

double cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; drops collinear points.
std::vector<Point> hull2d(std::vector<Point> pts, double eps) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](const Point& a, const Point& b) {
                              return std::abs(a[0] - b[0]) <= eps && std::abs(a[1] - b[1]) <= eps;
                          }),
              pts.end());
    if (pts.size() < 3) return pts;
    const double area_eps = eps * scale_of(pts);
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= area_eps) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= area_eps) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

Point scaled(const Point& p, double s) { return {p[0] * s, p[1] * s, p[2] * s}; }

double dist(const Point& a, const Point& b) {
    const Point d = sub(a, b);
    return std::sqrt(dot(d, d));
}

} // namespace

Polytope convex_hull(int dim, std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    if (dim < 1 || dim > 3) throw std::invalid_argument("convex_hull: dimension must be 1, 2 or 3");
    Polytope p;
    p.dim_ = dim;
    const double eps = 1e-12 * scale_of(points);
    std::vector<Point> pts(points.begin(), points.end());
    for (Point& q : pts)
        for (int a = dim; a < 3; ++a) q[a] = 0.0;
    if (dim == 1) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a[0] < b[0]; });
        p.vertices_ = {*lo};
        if ((*hi)[0] - (*lo)[0] > eps) {
            p.vertices_.push_back(*hi);
            p.degenerate_ = false;
        }
    } else if (dim == 2) {
        p.vertices_ = hull2d(std::move(pts), eps);
        p.degenerate_ = p.vertices_.size() < 3;
    } else {
        detail::Hull3 h = detail::hull3d(pts);
        p.vertices_ = std::move(h.vertices);
        p.triangles_ = std::move(h.triangles);
        p.degenerate_ = h.degenerate;
    }
    return p;
}

Polytope convex_hull(int dim, const std::vector<Point>& points) { return convex_hull(dim, std::span<const Point>(points)); }

double Polytope::diameter_scale() const { return scale_of(vertices_); }

std::vector<Halfspace> Polytope::facets() const {
    std::vector<Halfspace> out;
    if (degenerate_) return out;
    if (dim_ == 1) {
        out.push_back({{1, 0, 0}, vertices_[1][0]});
        out.push_back({{-1, 0, 0}, -vertices_[0][0]});
    } else if (dim_ == 2) {
        const std::size_t m = vertices_.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = vertices_[i];
            const Point& b = vertices_[(i + 1) % m];
            Point nrm{b[1] - a[1], a[0] - b[0], 0.0};
            const double l = std::sqrt(dot(nrm, nrm));
            nrm = scaled(nrm, 1.0 / l);
            out.push_back({nrm, dot(nrm, a)});
        }
    } else {
        for (const auto& t : triangles_) {
            Point nrm = cross(sub(vertices_[t[1]], vertices_[t[0]]), sub(vertices_[t[2]], vertices_[t[0]]));
            nrm = scaled(nrm, 1.0 / std::sqrt(dot(nrm, nrm)));
            const double off = dot(nrm, vertices_[t[0]]);
            const double tol = 1e-9 * std::max(1.0, diameter_scale());
            bool seen = false;
            for (const Halfspace& h : out)
                if (dist(h.normal, nrm) < 1e-9 && std::abs(h.offset - off) < tol) seen = true;
            if (!seen) out.push_back({nrm, off});
        }
    }
    return out;
}

bool Polytope::contains(const Point& x, double eps) const {
    if (degenerate_) return false;
    const double tol = eps * std::max(1.0, diameter_scale());
    for (const Halfspace& h : facets())
        if (dot(h.normal, x) - h.offset > tol) return false;
    return true;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Point> pts;
    pts.reserve(p.vertices().size() * q.vertices().size());
    for (const Point& a : p.vertices())
        for (const Point& b : q.vertices()) pts.push_back(add(a, b));
    return convex_hull(p.dim(), pts);
}

Polytope reflect_body(const Polytope& p, const Point& x) {
    std::vector<Point> pts;
    for (const Point& v : p.vertices()) pts.push_back(sub(x, v));
    return convex_hull(p.dim(), pts);
}

Polytope difference_body(const Polytope& p) { return minkowski_sum(p, reflect_body(p, Point{})); }

Polytope hull_union_reflection(const Polytope& p, const Point& x) {
    std::vector<Point> pts = p.vertices();
    for (const Point& v : p.vertices()) pts.push_back(sub(x, v));
    return convex_hull(p.dim(), pts);
}

namespace {

std::vector<Point> clip_polygon(const std::vector<Point>& poly, const Halfspace& h) {
    std::vector<Point> out;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % m];
        const double sa = dot(h.normal, a) - h.offset, sb = dot(h.normal, b) - h.offset;
        if (sa <= 0) out.push_back(a);
        if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
            const double t = sa / (sa - sb);
            out.push_back(add(a, scaled(sub(b, a), t)));
        }
    }
    return out;
}

Polytope clip_polytope3(const Polytope& body, const Halfspace& h) {
    std::vector<Point> pts;
    const auto& v = body.vertices();
    std::vector<double> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        s[i] = dot(h.normal, v[i]) - h.offset;
        if (s[i] <= 0) pts.push_back(v[i]);
    }
    for (const auto& t : body.triangles())
        for (int e = 0; e < 3; ++e) {
            const int a = t[e], b = t[(e + 1) % 3];
            if ((s[a] < 0 && s[b] > 0) || (s[a] > 0 && s[b] < 0)) {
                const double w = s[a] / (s[a] - s[b]);
                pts.push_back(add(v[a], scaled(sub(v[b], v[a]), w)));
            }
        }
    if (pts.empty()) return Polytope{};
    return convex_hull(3, pts);
}

} // namespace

Polytope intersection(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("intersection: dimension mismatch");
    const int n = p.dim();
    Point lo{}, hi{};
    for (int a = 0; a < n; ++a) {
        lo[a] = std::numeric_limits<double>::infinity();
        hi[a] = -lo[a];
        for (const Point& v : p.vertices()) lo[a] = std::min(lo[a], v[a]), hi[a] = std::max(hi[a], v[a]);
    }
    std::vector<Point> box;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Point c{};
        for (int a = 0; a < n; ++a) c[a] = (mask >> a) & 1 ? hi[a] : lo[a];
        box.push_back(c);
    }
    Polytope cur = convex_hull(n, box);
    std::vector<Halfspace> hs = p.facets();
    for (const Halfspace& h : q.facets()) hs.push_back(h);
    for (const Halfspace& h : hs) {
        if (cur.vertices().empty()) break;
        if (n == 1) {
            double a = cur.vertices().front()[0], b = cur.vertices().back()[0];
            if (h.normal[0] > 0) b = std::min(b, h.offset);
            else a = std::max(a, -h.offset);
            if (a > b) return Polytope{};
            std::vector<Point> seg{{a, 0, 0}, {b, 0, 0}};
            cur = convex_hull(1, seg);
        } else if (n == 2) {
            std::vector<Point> poly = clip_polygon(cur.vertices(), h);
            if (poly.empty()) return Polytope{};
            cur = convex_hull(2, poly);
        } else {
            cur = clip_polytope3(cur, h);
        }
    }
    return cur;
}

double volume(const Polytope& p) {
    if (p.degenerate()) return 0.0;
    const auto& v = p.vertices();
    if (p.dim() == 1) return v[1][0] - v[0][0];
    if (p.dim() == 2) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % v.size()];
            s += a[0] * b[1] - a[1] * b[0];
        }
        return 0.5 * s;
    }
    // fan from the first vertex keeps the terms small
    const Point& o = v.front();
    double s = 0.0;
    for (const auto& t : p.triangles()) s += dot(sub(v[t[0]], o), cross(sub(v[t[1]], o), sub(v[t[2]], o)));
    return s / 6.0;
}

double support_function(const Polytope& p, const Point& u) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Point& v : p.vertices()) best = std::max(best, dot(u, v));
    return best;
}

Polytope polar(const Polytope& p) {
    if (p.degenerate()) throw std::domain_error("polar: body has no interior");
    const double tol = 1e-12 * std::max(1.0, p.diameter_scale());
    std::vector<Point> pts;
    for (const Halfspace& h : p.facets()) {
        if (h.offset <= tol) throw std::domain_error("polar: origin is not strictly interior");
        pts.push_back(scaled(h.normal, 1.0 / h.offset));
    }
    return convex_hull(p.dim(), pts);
}

DualityCheck hull_duality_check(const Polytope& p, double tol) {
    const Polytope minus_p = reflect_body(p, Point{});
    const Polytope lhs = polar(intersection(p, minus_p));
    const Polytope pp = polar(p);
    const Polytope rhs = hull_union_reflection(pp, Point{});
    auto one_way = [](const Polytope& a, const Polytope& b) {
        double worst = 0.0;
        for (const Point& x : a.vertices()) {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& y : b.vertices()) best = std::min(best, dist(x, y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    DualityCheck out;
    out.max_vertex_distance = std::max(one_way(lhs, rhs), one_way(rhs, lhs));
    out.match = lhs.vertices().size() == rhs.vertices().size() &&
                out.max_vertex_distance <= tol * std::max(1.0, rhs.diameter_scale());
    return out;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace dfun
