#include "dfun/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfun {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::size_t default_nodes(int n) { return n == 1 ? 257 : n == 2 ? 65 : 33; }

struct Coefficients {
    std::vector<Point> a;
    std::vector<double> b;
    double q[3][3]{};
};

Coefficients draw(std::uint64_t seed, int n, std::size_t k) {
    if (n < 1 || n > 3) throw std::invalid_argument("random instance: dimension must be 1, 2 or 3");
    if (k == 0) throw std::invalid_argument("random instance: need at least one affine piece");
    CounterRng rng(seed);
    Coefficients c;
    for (std::size_t i = 0; i < k; ++i) {
        Point a{};
        for (int d = 0; d < n; ++d) a[d] = rng.uniform(-2.0, 2.0);
        c.a.push_back(a);
        c.b.push_back(rng.uniform(-1.0, 1.0));
    }
    double l[3][3]{};
    for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) l[r][s] = rng.uniform(-0.5, 0.5);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            double acc = r == s ? 0.05 : 0.0;
            for (int t = 0; t < n; ++t) acc += l[r][t] * l[s][t];
            c.q[r][s] = acc;
        }
    return c;
}

double quadratic(const Coefficients& c, const Point& x, int n) {
    double acc = 0.0;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) acc += x[r] * c.q[r][s] * x[s];
    return 0.5 * acc;
}

double max_affine(const Coefficients& c, const Point& x, int n) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        double v = c.b[i];
        for (int d = 0; d < n; ++d) v += c.a[i][d] * x[d];
        best = std::max(best, v);
    }
    return best;
}

BoxDomain domain_for(int n, const LogConcaveParams& p) {
    return BoxDomain::centered(n, p.half_width, p.nodes ? p.nodes : default_nodes(n));
}

} // namespace

std::uint64_t CounterRng::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::next() {
    ++counter_;
    return mix(seed_ + counter_ * kGolden);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

CounterRng CounterRng::fork(std::uint64_t label) const { return CounterRng(mix(seed_ ^ mix(label + kGolden))); }

GridFunction generate_random_logconcave(std::uint64_t seed, int n, std::size_t k, const LogConcaveParams& params) {
    const Coefficients c = draw(seed, n, k);
    return GridFunction::from_function(domain_for(n, params), [&](const Point& x) {
        return std::exp(-(max_affine(c, x, n) + quadratic(c, x, n)));
    });
}

GridFunction generate_random_alpha_concave(std::uint64_t seed, int n, std::size_t k, double alpha,
                                           const LogConcaveParams& params) {
    if (!(alpha < 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("generate_random_alpha_concave: alpha must be finite and negative");
    const Coefficients c = draw(seed, n, k);
    return GridFunction::from_function(domain_for(n, params), [&](const Point& x) {
        const double u = std::max(0.2 + quadratic(c, x, n), max_affine(c, x, n));
        return std::pow(u, 1.0 / alpha);
    });
}

Polytope generate_random_polytope(std::uint64_t seed, int n, std::size_t m) {
    if (n < 1 || n > 3) throw std::invalid_argument("generate_random_polytope: dimension must be 1, 2 or 3");
    if (m < static_cast<std::size_t>(n) + 1) throw std::invalid_argument("generate_random_polytope: need m >= n + 1");
    CounterRng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Point> pts;
        while (pts.size() < m) {
            Point p{};
            double r2 = 0.0;
            for (int d = 0; d < n; ++d) {
                p[d] = rng.uniform(-1.0, 1.0);
                r2 += p[d] * p[d];
            }
            if (r2 <= 1.0) pts.push_back(p);
        }
        Polytope body = convex_hull(n, pts);
        if (!body.degenerate() && volume(body) > 1e-9) return body;
    }
    throw std::runtime_error("generate_random_polytope: no full-dimensional sample in 100 attempts");
}

Polytope generate_random_centered_polytope(std::uint64_t seed, int n, std::size_t m) {
    const Polytope p = generate_random_polytope(seed, n, m);
    Point mean{};
    for (const Point& v : p.vertices())
        for (int d = 0; d < n; ++d) mean[d] += v[d] / static_cast<double>(p.vertices().size());
    std::vector<Point> shifted = p.vertices();
    for (Point& v : shifted)
        for (int d = 0; d < n; ++d) v[d] -= mean[d];
    return convex_hull(n, shifted);
}

Point random_interior_point(CounterRng& rng, const Polytope& p) {
    Point lo{}, hi{};
    for (int d = 0; d < p.dim(); ++d) {
        lo[d] = hi[d] = p.vertices().front()[d];
        for (const Point& v : p.vertices()) lo[d] = std::min(lo[d], v[d]), hi[d] = std::max(hi[d], v[d]);
    }
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Point x{};
        for (int d = 0; d < p.dim(); ++d) x[d] = rng.uniform(lo[d], hi[d]);
        if (p.contains(x, 0.0)) return x;
    }
    throw std::runtime_error("random_interior_point: rejection sampling failed");
}

} // namespace dfun
