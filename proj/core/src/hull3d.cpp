#include "hull3d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace dfun::detail {

namespace {

struct Face {
    std::array<int, 3> v;
    Point normal;
    double offset;
    bool alive = true;
};

Face make_face(const std::vector<Point>& pts, int a, int b, int c) {
    Face f{{a, b, c}, cross(sub(pts[b], pts[a]), sub(pts[c], pts[a])), 0.0};
    f.offset = dot(f.normal, pts[a]);
    return f;
}

double norm(const Point& p) { return std::sqrt(dot(p, p)); }

std::vector<Point> dedupe(std::vector<Point> pts, double eps) {
    std::sort(pts.begin(), pts.end());
    std::vector<Point> out;
    for (const Point& p : pts) {
        bool dup = false;
        for (auto it = out.rbegin(); it != out.rend() && p[0] - (*it)[0] <= eps; ++it)
            if (norm(sub(p, *it)) <= eps) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(p);
    }
    return out;
}

// Incremental hull over pts; returns alive faces (indices into pts) or empty
// when the set is flat.
std::vector<Face> build(const std::vector<Point>& pts, double eps) {
    const int n = static_cast<int>(pts.size());
    if (n < 4) return {};
    int i0 = 0, i1 = 0, i2 = -1, i3 = -1;
    double best = 0.0;
    for (int i = 1; i < n; ++i) {
        double d = norm(sub(pts[i], pts[i0]));
        if (d > best) best = d, i1 = i;
    }
    if (best <= eps) return {};
    best = 0.0;
    const Point dir = sub(pts[i1], pts[i0]);
    for (int i = 0; i < n; ++i) {
        double d = norm(cross(dir, sub(pts[i], pts[i0]))) / norm(dir);
        if (d > best) best = d, i2 = i;
    }
    if (best <= eps) return {};
    best = 0.0;
    const Point nrm = cross(dir, sub(pts[i2], pts[i0]));
    for (int i = 0; i < n; ++i) {
        double d = std::abs(dot(nrm, sub(pts[i], pts[i0]))) / norm(nrm);
        if (d > best) best = d, i3 = i;
    }
    if (best <= eps) return {};

    std::vector<Face> faces;
    const Point centroid{(pts[i0][0] + pts[i1][0] + pts[i2][0] + pts[i3][0]) / 4,
                         (pts[i0][1] + pts[i1][1] + pts[i2][1] + pts[i3][1]) / 4,
                         (pts[i0][2] + pts[i1][2] + pts[i2][2] + pts[i3][2]) / 4};
    auto add_oriented = [&](int a, int b, int c) {
        Face f = make_face(pts, a, b, c);
        if (dot(f.normal, centroid) - f.offset > 0) f = make_face(pts, a, c, b);
        faces.push_back(f);
    };
    add_oriented(i0, i1, i2);
    add_oriented(i0, i1, i3);
    add_oriented(i0, i2, i3);
    add_oriented(i1, i2, i3);

    for (int p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<int> visible;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (!faces[f].alive) continue;
            if (dot(faces[f].normal, pts[p]) - faces[f].offset > eps * norm(faces[f].normal)) visible.push_back(f);
        }
        if (visible.empty()) continue;
        std::map<std::pair<int, int>, int> edge_owner;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (!faces[f].alive) continue;
            const auto& v = faces[f].v;
            for (int e = 0; e < 3; ++e) edge_owner[{v[e], v[(e + 1) % 3]}] = f;
        }
        std::vector<char> is_visible(faces.size(), 0);
        for (int f : visible) is_visible[f] = 1;
        std::vector<std::pair<int, int>> horizon;
        for (int f : visible) {
            const auto& v = faces[f].v;
            for (int e = 0; e < 3; ++e) {
                const int a = v[e], b = v[(e + 1) % 3];
                auto it = edge_owner.find({b, a});
                if (it == edge_owner.end() || !is_visible[it->second]) horizon.emplace_back(a, b);
            }
        }
        for (int f : visible) faces[f].alive = false;
        for (auto [a, b] : horizon) faces.push_back(make_face(pts, a, b, p));
    }
    std::vector<Face> alive;
    for (const Face& f : faces)
        if (f.alive) alive.push_back(f);
    return alive;
}

} // namespace

Hull3 hull3d(const std::vector<Point>& input) {
    double scale = 0.0;
    for (const Point& p : input) scale = std::max({scale, std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
    const double eps = 1e-11 * std::max(scale, 1e-300);
    std::vector<Point> pts = dedupe(input, eps);

    Hull3 out;
    std::vector<Face> faces = build(pts, eps);
    if (faces.empty()) {
        out.vertices = pts;
        return out;
    }

    // keep vertices whose incident facet planes span R^3
    std::vector<std::vector<Point>> incident(pts.size());
    for (const Face& f : faces) {
        const double l = norm(f.normal);
        const Point u{f.normal[0] / l, f.normal[1] / l, f.normal[2] / l};
        for (int v : f.v) {
            bool seen = false;
            for (const Point& w : incident[v])
                if (norm(sub(w, u)) < 1e-9) seen = true;
            if (!seen) incident[v].push_back(u);
        }
    }
    std::vector<Point> extreme;
    for (std::size_t v = 0; v < pts.size(); ++v) {
        const auto& ns = incident[v];
        bool spans = false;
        for (std::size_t a = 0; a < ns.size() && !spans; ++a)
            for (std::size_t b = a + 1; b < ns.size() && !spans; ++b)
                for (std::size_t c = b + 1; c < ns.size() && !spans; ++c)
                    spans = std::abs(dot(ns[a], cross(ns[b], ns[c]))) > 1e-9;
        if (spans) extreme.push_back(pts[v]);
    }
    std::sort(extreme.begin(), extreme.end());

    faces = build(extreme, eps);
    out.degenerate = faces.empty();
    out.vertices = extreme;
    for (const Face& f : faces) out.triangles.push_back(f.v);
    return out;
}

} // namespace dfun::detail
