#include "dfun/suites.hpp"

#include "dfun/families.hpp"
#include "dfun/integration.hpp"
#include "dfun/io.hpp"
#include "dfun/polar_identity.hpp"
#include "dfun/random.hpp"
#include "dfun/rearrangement.hpp"
#include "dfun/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dfun {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::uint64_t instance_seed(std::uint64_t seed, int n, std::size_t i) {
    return CounterRng::mix(seed ^ CounterRng::mix((static_cast<std::uint64_t>(n) << 32) | i));
}

struct Ctx {
    const SuiteConfig& cfg;
    std::vector<CaseResult>& out;

    std::vector<int> dims(std::vector<int> def) const { return cfg.dim ? std::vector<int>{cfg.dim} : def; }
    std::size_t nodes(std::size_t def) const { return cfg.nodes ? cfg.nodes : def; }
    double half_width(double def) const { return cfg.half_width > 0 ? cfg.half_width : def; }
    double tol(double def) const { return cfg.tol ? *cfg.tol : def; }
    std::size_t instances(std::size_t def) const { return cfg.instances ? cfg.instances : def; }
    std::vector<double> alphas(std::vector<double> def) const { return cfg.alpha ? std::vector<double>{*cfg.alpha} : def; }

    // Runs body, timing it, and appends the case it returns.
    void run(const std::function<CaseResult()>& body) const {
        const auto t0 = Clock::now();
        CaseResult c = body();
        c.ms = elapsed_ms(t0);
        out.push_back(std::move(c));
    }
};

struct Measured {
    double ratio = 0.0;
    double tail = 0.0;
};

Measured functional_ratio(const GridFunction& f, AlphaParam alpha, Route route, const DifferenceOptions& opts = {}) {
    const GridFunction d = difference_function(f, alpha, route, opts);
    const Integral i_f = integrate(f), i_d = integrate(d);
    return {i_d.value / i_f.value, std::max(i_f.tail_estimate / i_f.value, i_d.tail_estimate / i_d.value)};
}

CaseResult with(CaseResult c, double tail, std::string grid) {
    c.tail_estimate = tail;
    c.grid = std::move(grid);
    return c;
}

Polytope unit_simplex(int n) {
    std::vector<Point> v(n + 1, Point{});
    for (int i = 0; i < n; ++i) v[i + 1][i] = 1.0;
    return convex_hull(n, v);
}

Polytope centered_cube(int n) {
    std::vector<Point> v;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Point p{};
        for (int d = 0; d < n; ++d) p[d] = (mask >> d) & 1 ? 1.0 : -1.0;
        v.push_back(p);
    }
    return convex_hull(n, v);
}

// Grid around a body: per-axis bounding interval widened by pad cells, with
// the body's extreme coordinates landing a quarter cell off the nodes.
BoxDomain grid_around(const Polytope& p, std::size_t nodes, double pad_cells) {
    std::array<Axis, kMaxDim> ax{};
    for (int a = 0; a < p.dim(); ++a) {
        double lo = p.vertices().front()[a], hi = lo;
        for (const Point& v : p.vertices()) lo = std::min(lo, v[a]), hi = std::max(hi, v[a]);
        const double h = (hi - lo) / (static_cast<double>(nodes) - 1.0 - 2.0 * pad_cells - 1.0);
        const double start = lo - (pad_cells + 0.25) * h;
        ax[a] = Axis{start, start + h * static_cast<double>(nodes - 1), nodes};
    }
    return BoxDomain(p.dim(), ax);
}

double body_bound(int n) { return binomial(2 * n, n); }

// ---------------------------------------------------------------- functional

void rs_functional_extremal(const Ctx& c) {
    for (int n : c.dims({1, 2, 3})) {
        const std::size_t def[] = {2049, 513, 129};
        const std::size_t nodes = c.nodes(def[n - 1]);
        const double w = c.half_width(25.0);
        c.run([&] {
            const BoxDomain dom = BoxDomain::cube(n, 0.0, 2.0 * w, nodes);
            const GridFunction g = sample(AnalyticFamily(OrthantExp{n}), dom);
            const Route route = n == 1 ? Route::Direct : Route::Conjugate;
            const Measured m = functional_ratio(g, AlphaParam::zero(), route);
            return with(make_case("orthant-exp/n=" + std::to_string(n), std::string("orthant-exp route=") + route_name(route),
                                  CheckKind::Equal, m.ratio, std::pow(2.0, n), std::pow(2.0, n), c.tol(0.02)),
                        m.tail, dom.describe());
        });
    }
}

void random_logconcave(const Ctx& c, bool lower) {
    for (int n : c.dims({1, 2})) {
        const std::size_t def[] = {257, 65, 33};
        LogConcaveParams params{c.nodes(def[n - 1]), c.half_width(6.0)};
        for (std::size_t i = 0; i < c.instances(50); ++i) {
            c.run([&] {
                const std::uint64_t s = instance_seed(c.cfg.seed, n, i);
                const std::size_t k = 1 + i % 4;
                const GridFunction f = generate_random_logconcave(s, n, k, params);
                const Measured m = functional_ratio(f, AlphaParam::zero(), Route::Direct);
                const std::string id = "logconcave/n=" + std::to_string(n) + "/i=" + std::to_string(i);
                const std::string desc = "seed=" + std::to_string(s) + " k=" + std::to_string(k);
                CaseResult r = lower ? make_case(id, desc, CheckKind::Lower, m.ratio, 1.0, 1.0, c.tol(0.02))
                                     : make_case(id, desc, CheckKind::Upper, m.ratio, std::pow(2.0, n), std::pow(2.0, n),
                                                 c.tol(0.02));
                return with(r, m.tail, f.domain().describe());
            });
        }
    }
}

Matrix3 random_matrix(CounterRng& rng, int n) {
    Matrix3 a = identity_matrix();
    // singular values in [0.45, 2.23], so |det| stays inside [0.2, 5] for n = 2
    auto sv = [&] { return std::exp(rng.uniform(std::log(0.45), std::log(2.23))); };
    if (n == 2) {
        const double t1 = rng.uniform(0.0, std::numbers::pi), t2 = rng.uniform(0.0, std::numbers::pi);
        const double s1 = sv(), s2 = sv();
        const double c1 = std::cos(t1), n1 = std::sin(t1), c2 = std::cos(t2), n2 = std::sin(t2);
        // R(t1) diag(s1, s2) R(t2)
        a[0][0] = c1 * s1 * c2 - n1 * s2 * n2;
        a[0][1] = -c1 * s1 * n2 - n1 * s2 * c2;
        a[1][0] = n1 * s1 * c2 + c1 * s2 * n2;
        a[1][1] = -n1 * s1 * n2 + c1 * s2 * c2;
    } else {
        for (int d = 0; d < n; ++d) a[d][d] = (rng.uniform() < 0.5 ? -1.0 : 1.0) * sv();
    }
    return a;
}

void rs_functional_affine(const Ctx& c) {
    for (int n : c.dims({2})) {
        const std::size_t def[] = {4097, 4097, 129};
        const std::size_t nodes = c.nodes(def[n - 1]);
        const double w = c.half_width(n == 3 ? 16.0 : 24.0);
        for (std::size_t i = 0; i < c.instances(10); ++i) {
            c.run([&] {
                CounterRng rng(instance_seed(c.cfg.seed, n, i));
                const Matrix3 a = random_matrix(rng, n);
                Point apex{}, shift{};
                for (int d = 0; d < n; ++d) apex[d] = rng.uniform(-1.0, 1.0);
                for (int r = 0; r < n; ++r)
                    for (int d = 0; d < n; ++d) shift[r] -= a[r][d] * apex[d];
                const double scale = rng.uniform(0.5, 2.0);
                const AnalyticFamily h = affine_image(AnalyticFamily(OrthantExp{n}), a, shift, scale);
                const BoxDomain dom = BoxDomain::centered(n, w, nodes);
                const GridFunction f = sample(h, dom);
                DifferenceOptions opts;
                opts.dual.margin = 2;
                opts.dual.count = n == 3 ? 0 : nodes / 2 + 1;
                const Measured m = functional_ratio(f, AlphaParam::zero(), Route::Conjugate, opts);
                return with(make_case("affine/n=" + std::to_string(n) + "/i=" + std::to_string(i), h.describe(),
                                      CheckKind::Equal, m.ratio, std::pow(2.0, n), std::pow(2.0, n), c.tol(0.03)),
                            m.tail, dom.describe());
            });
        }
    }
}

// ---------------------------------------------------------------- bodies

void rs_body_simplex(const Ctx& c) {
    if (!c.cfg.polytope_path.empty()) {
        c.run([&] {
            const Polytope p = load_polytope(c.cfg.polytope_path);
            const int n = p.dim();
            const double r = volume(difference_body(p)) / volume(p);
            return make_case("file", c.cfg.polytope_path, CheckKind::Range, r, std::pow(2.0, n), body_bound(n),
                             c.tol(1e-12));
        });
        return;
    }
    for (int n : c.dims({1, 2, 3})) {
        c.run([&] {
            const Polytope p = unit_simplex(n);
            const double r = volume(difference_body(p)) / volume(p);
            return make_case("simplex/n=" + std::to_string(n), "unit simplex", CheckKind::Equal, r, body_bound(n),
                             body_bound(n), c.tol(n == 3 ? 1e-9 : 1e-12));
        });
    }
}

void rs_body_random(const Ctx& c) {
    for (int n : c.dims({2})) {
        for (std::size_t i = 0; i < c.instances(100); ++i) {
            c.run([&] {
                const std::uint64_t s = instance_seed(c.cfg.seed, n, i);
                const std::size_t m = n + 1 + i % 8;
                const Polytope p = generate_random_polytope(s, n, m);
                const double r = volume(difference_body(p)) / volume(p);
                return make_case("random/n=" + std::to_string(n) + "/i=" + std::to_string(i),
                                 "seed=" + std::to_string(s) + " m=" + std::to_string(m), CheckKind::Range, r,
                                 std::pow(2.0, n), body_bound(n), c.tol(1e-12));
            });
        }
    }
}

void hull_union(const Ctx& c) {
    for (int n : c.dims({2})) {
        c.run([&] {
            const Polytope p = unit_simplex(n);
            const double r = volume(hull_union_reflection(p, Point{})) / volume(p);
            return make_case("simplex-vertex/n=" + std::to_string(n), "unit simplex, x at a vertex", CheckKind::Equal, r,
                             std::pow(2.0, n), std::pow(2.0, n), c.tol(1e-12));
        });
        for (std::size_t i = 0; i < c.instances(100); ++i) {
            c.run([&] {
                const std::uint64_t s = instance_seed(c.cfg.seed, n, i);
                // x - P is P reflected through x/2, so the origin is kept inside P
                const Polytope p = generate_random_centered_polytope(s, n, n + 1 + i % 8);
                CounterRng rng(CounterRng::mix(s));
                const Point x = random_interior_point(rng, p);
                const double r = volume(hull_union_reflection(p, x)) / volume(p);
                std::string desc = "seed=" + std::to_string(s) + " x=(";
                for (int d = 0; d < n; ++d) desc += (d ? "," : "") + fmt(x[d]);
                return make_case("random/n=" + std::to_string(n) + "/i=" + std::to_string(i), desc + ")",
                                 CheckKind::Upper, r, std::pow(2.0, n), std::pow(2.0, n), c.tol(1e-12));
            });
        }
    }
}

void polar_case(const Ctx& c, const std::string& id, const Polytope& p, double half_width, std::size_t nodes) {
    c.run([&] {
        const PolarIdentityResult r = polar_identity_check(p, half_width, nodes);
        CaseResult cr = make_case(id, "n!V(P*)=" + fmt(r.expected), CheckKind::Equal, r.ratio, 1.0, 1.0, c.tol(0.02));
        return with(cr, r.tail_estimate / r.integral,
                    BoxDomain::centered(p.dim(), half_width, nodes).describe());
    });
}

void polar_identity(const Ctx& c) {
    const std::vector<int> dims = c.dims({1, 2, 3});
    auto has = [&](int n) { return std::find(dims.begin(), dims.end(), n) != dims.end(); };
    if (has(1)) polar_case(c, "segment", centered_cube(1), c.half_width(20.0), c.nodes(4001));
    if (has(2)) polar_case(c, "square", centered_cube(2), c.half_width(20.0), c.nodes(1025));
    if (has(3)) polar_case(c, "cube", centered_cube(3), c.half_width(16.0), c.nodes(193));
    if (has(2)) {
        for (std::size_t i = 0; i < c.instances(10); ++i) {
            const Polytope p = generate_random_centered_polytope(instance_seed(c.cfg.seed, 2, i), 2, 5 + i % 6);
            // e^{-h_P} decays at least like e^{-r|x|}, r the distance to the nearest facet
            double r_in = std::numeric_limits<double>::infinity(), r_out = 0.0;
            for (const Halfspace& hs : p.facets()) r_in = std::min(r_in, hs.offset);
            for (const Point& v : p.vertices()) r_out = std::max(r_out, std::hypot(v[0], v[1]));
            const double w = c.half_width(25.0 / r_in);
            const double h = 0.1 / r_out;
            const std::size_t nodes = c.nodes(2 * static_cast<std::size_t>(std::ceil(w / h)) + 1);
            polar_case(c, "random/i=" + std::to_string(i), p, w, nodes);
        }
    }
}

void hull_duality(const Ctx& c) {
    std::vector<std::pair<std::string, Polytope>> bodies;
    const std::vector<int> dims = c.dims({1, 2, 3});
    auto has = [&](int n) { return std::find(dims.begin(), dims.end(), n) != dims.end(); };
    if (has(1)) bodies.emplace_back("segment", convex_hull(1, std::vector<Point>{{-1.0}, {2.0}}));
    if (has(2)) {
        bodies.emplace_back("square", centered_cube(2));
        bodies.emplace_back("triangle", convex_hull(2, std::vector<Point>{{-1.0, -0.5}, {2.0, -0.5}, {-0.25, 1.5}}));
        for (std::size_t i = 0; i < c.instances(10); ++i)
            bodies.emplace_back("random2/i=" + std::to_string(i),
                                generate_random_centered_polytope(instance_seed(c.cfg.seed, 2, i), 2, 5 + i % 6));
    }
    if (has(3)) {
        bodies.emplace_back("cube", centered_cube(3));
        for (std::size_t i = 0; i < std::min<std::size_t>(c.instances(5), 5); ++i)
            bodies.emplace_back("random3/i=" + std::to_string(i),
                                generate_random_centered_polytope(instance_seed(c.cfg.seed, 3, i), 3, 8 + i % 6));
    }
    for (const auto& [id, p] : bodies) {
        c.run([&] {
            const DualityCheck d = hull_duality_check(p, 1e-9);
            // a vertex-count mismatch is a failure whatever the distance
            const double dist = d.match || d.max_vertex_distance > 1e-9 ? d.max_vertex_distance
                                                                        : std::numeric_limits<double>::infinity();
            return make_case(id, "max vertex distance", CheckKind::Upper, dist, 1e-9, 1e-9, c.tol(1e-12));
        });
    }
}

// ---------------------------------------------------------------- alpha

void alpha_minus_infinity(const Ctx& c) {
    for (int n : c.dims({2, 3})) {
        const std::size_t def[] = {1025, 1025, 193};
        const std::size_t nodes = c.nodes(def[n - 1]);
        const double bound = body_bound(n) / std::pow(2.0, n);
        c.run([&] {
            const Polytope s = unit_simplex(n);
            const BoxDomain dom = grid_around(s, nodes, 2.0);
            SimplexIndicator si{n, s.vertices()};
            const GridFunction f = sample(AnalyticFamily(si), dom);
            const Measured m = functional_ratio(f, AlphaParam::minus_infinity(), Route::LevelSet);
            return with(make_case("simplex/n=" + std::to_string(n), "simplex indicator", CheckKind::Equal, m.ratio,
                                  bound, bound, c.tol(0.02)),
                        m.tail, dom.describe());
        });
    }
    for (int n : c.dims({2})) {
        const std::size_t def[] = {1025, 513, 129};
        const std::size_t nodes = c.nodes(def[n - 1]);
        const double bound = body_bound(n) / std::pow(2.0, n);
        for (std::size_t i = 0; i < c.instances(20); ++i) {
            c.run([&] {
                const std::uint64_t s = instance_seed(c.cfg.seed, n, i);
                const Polytope p = generate_random_polytope(s, n, n + 4 + i % 6);
                const BoxDomain dom = grid_around(p, nodes, 2.0);
                const GridFunction f = sample(AnalyticFamily(PolytopeIndicator{p}), dom);
                const Measured m = functional_ratio(f, AlphaParam::minus_infinity(), Route::LevelSet);
                return with(make_case("polytope/n=" + std::to_string(n) + "/i=" + std::to_string(i),
                                      "seed=" + std::to_string(s), CheckKind::Upper, m.ratio, bound, bound, c.tol(0.02)),
                            m.tail, dom.describe());
            });
        }
    }
}

double general_bound(int n, double alpha) { return std::pow(2.0, -(n + 1.0 / alpha)) * body_bound(n); }

void alpha_general_bound(const Ctx& c) {
    for (double alpha : c.alphas({-0.5, -1.0, -2.0})) {
        for (int n : c.dims({1, 2})) {
            const std::size_t def[] = {257, 65, 33};
            LogConcaveParams params{c.nodes(def[n - 1]), c.half_width(6.0)};
            const double bound = general_bound(n, alpha);
            for (std::size_t i = 0; i < c.instances(20); ++i) {
                c.run([&] {
                    const std::uint64_t s = instance_seed(c.cfg.seed, n, i);
                    const GridFunction f = generate_random_alpha_concave(s, n, 1 + i % 4, alpha, params);
                    const Measured m = functional_ratio(f, AlphaParam::finite(alpha), Route::Direct);
                    return with(make_case("alpha=" + fmt(alpha) + "/n=" + std::to_string(n) + "/i=" + std::to_string(i),
                                          "seed=" + std::to_string(s), CheckKind::Upper, m.ratio, bound, bound,
                                          c.tol(0.02)),
                                m.tail, f.domain().describe());
                });
            }
        }
    }
}

double one_d_bound(double alpha) { return alpha > -1.0 ? 2.0 : std::pow(2.0, -1.0 / alpha); }

GridFunction extremal_1d(double alpha, std::size_t nodes, double half_width) {
    if (alpha > -1.0) return sample(AnalyticFamily(OneDExtremalA{alpha}), BoxDomain::cube(1, 0.0, 2.0 * half_width, nodes));
    return sample(AnalyticFamily(OneDExtremalB{alpha}), BoxDomain::cube(1, 0.0, 1.0, nodes));
}

void alpha_1d(const Ctx& c) {
    if (c.cfg.dim > 1) throw std::invalid_argument("alpha-1d is one-dimensional");
    for (double alpha : c.alphas({-0.5, -2.0, -1.0})) {
        const double bound = one_d_bound(alpha);
        c.run([&] {
            const GridFunction f = extremal_1d(alpha, c.nodes(4001), c.half_width(200.0));
            DifferenceOptions opts;
            opts.output = fine_difference_domain(f.domain());
            const Measured m = functional_ratio(f, AlphaParam::finite(alpha), Route::Direct, opts);
            return with(make_case("extremal/alpha=" + fmt(alpha), alpha > -1.0 ? "extremal-a" : "extremal-b",
                                  CheckKind::Equal, m.ratio, bound, bound, c.tol(0.02 / bound)),
                        m.tail, f.domain().describe());
        });
        LogConcaveParams params{c.nodes(1025), 6.0};
        for (std::size_t i = 0; i < c.instances(20); ++i) {
            c.run([&] {
                const std::uint64_t s = instance_seed(c.cfg.seed, 1, i);
                const GridFunction f = generate_random_alpha_concave(s, 1, 1 + i % 4, alpha, params);
                const Measured m = functional_ratio(f, AlphaParam::finite(alpha), Route::Direct);
                return with(make_case("random/alpha=" + fmt(alpha) + "/i=" + std::to_string(i), "seed=" + std::to_string(s),
                                      CheckKind::Upper, m.ratio, bound, bound, c.tol(0.02)),
                            m.tail, f.domain().describe());
            });
        }
    }
}

void rearrangement_cases(const Ctx& c, const std::string& id, const GridFunction& f, double alpha) {
    const auto t0 = Clock::now();
    const RearrangementReport r = check_rearrangement(f, AlphaParam::finite(alpha));
    const double ms = elapsed_ms(t0);
    const std::string grid = f.domain().describe();
    for (std::size_t k = 0; k < 6; ++k) {
        const PropertyCheck& p = r.properties[k];
        CaseResult cr = make_case(id + "/" + RearrangementReport::property_name(k), "gap vs tolerance", CheckKind::Upper,
                                  p.gap, p.tolerance, p.tolerance, c.cfg.tol ? *c.cfg.tol : 0.0);
        cr.ms = k == 0 ? ms : 0.0;
        cr.grid = grid;
        c.out.push_back(cr);
    }
    CaseResult chain = make_case(id + "/chain-upper", "ratio(f) <= ratio(f*)", CheckKind::Upper, r.ratio_f, r.ratio_star,
                                 r.ratio_star, c.tol(0.02));
    chain.grid = grid;
    c.out.push_back(chain);
    CaseResult eq = make_case(id + "/chain-equal", "ratio(f*) = closed form", CheckKind::Equal, r.ratio_star,
                              r.ratio_formula, r.ratio_formula, c.tol(0.02));
    eq.grid = grid;
    c.out.push_back(eq);
}

void rearrange_lemma(const Ctx& c) {
    if (c.cfg.dim > 1) throw std::invalid_argument("rearrange-lemma is one-dimensional");
    const std::size_t nodes = c.nodes(1025);
    for (double alpha : c.alphas({-0.5, -2.0})) {
        rearrangement_cases(c, "extremal/alpha=" + fmt(alpha), extremal_1d(alpha, nodes, c.half_width(50.0)), alpha);
    }
    const std::vector<double> cycle = c.cfg.alpha ? std::vector<double>{*c.cfg.alpha} : std::vector<double>{-0.5, -1.0, -2.0};
    LogConcaveParams params{nodes, c.half_width(6.0)};
    for (std::size_t i = 0; i < c.instances(20); ++i) {
        const double alpha = cycle[i % cycle.size()];
        const std::uint64_t s = instance_seed(c.cfg.seed, 1, i);
        rearrangement_cases(c, "random/i=" + std::to_string(i) + "/alpha=" + fmt(alpha),
                            generate_random_alpha_concave(s, 1, 1 + i % 4, alpha, params), alpha);
    }
}

using SuiteFn = void (*)(const Ctx&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r = {
        {"rs-functional-extremal", rs_functional_extremal},
        {"rs-functional-random", [](const Ctx& c) { random_logconcave(c, false); }},
        {"rs-functional-affine", rs_functional_affine},
        {"pl-lower", [](const Ctx& c) { random_logconcave(c, true); }},
        {"rs-body-simplex", rs_body_simplex},
        {"rs-body-random", rs_body_random},
        {"hull-union", hull_union},
        {"polar-identity", polar_identity},
        {"hull-duality", hull_duality},
        {"alpha-minus-infinity", alpha_minus_infinity},
        {"alpha-general-bound", alpha_general_bound},
        {"alpha-1d", alpha_1d},
        {"rearrange-lemma", rearrange_lemma},
    };
    return r;
}

} // namespace

const char* check_kind_name(CheckKind k) {
    switch (k) {
    case CheckKind::Upper: return "upper";
    case CheckKind::Lower: return "lower";
    case CheckKind::Equal: return "equal";
    case CheckKind::Range: return "range";
    }
    return "?";
}

void SuiteConfig::validate() const {
    if (!registry().contains(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
    if (dim < 0 || dim > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
    if (nodes != 0 && nodes < 33) throw std::invalid_argument("nodes per axis must be >= 33");
    if (half_width < 0.0 || !std::isfinite(half_width)) throw std::invalid_argument("half-width must be positive");
    if (tol && !(*tol > 0.0 && *tol <= 0.2)) throw std::invalid_argument("tolerance must lie in (0, 0.2]");
    if (alpha && !(*alpha < 0.0 && std::isfinite(*alpha))) throw std::invalid_argument("alpha must be finite and negative");
}

CaseResult make_case(std::string id, std::string descriptor, CheckKind kind, double ratio, double bound,
                     double bound_hi, double tol) {
    CaseResult c;
    c.id = std::move(id);
    c.descriptor = std::move(descriptor);
    c.kind = kind;
    c.ratio = ratio;
    c.bound = bound;
    c.bound_hi = kind == CheckKind::Range ? bound_hi : bound;
    c.tol = tol;
    const double scale = bound != 0.0 ? std::abs(bound) : 1.0;
    switch (kind) {
    case CheckKind::Upper: c.slack = (bound * (1 + tol) - ratio) / scale; break;
    case CheckKind::Lower: c.slack = (ratio - bound * (1 - tol)) / scale; break;
    case CheckKind::Equal: c.slack = tol - std::abs(ratio - bound) / scale; break;
    case CheckKind::Range:
        c.slack = std::min(ratio - bound * (1 - tol), c.bound_hi * (1 + tol) - ratio) / scale;
        break;
    }
    c.pass = std::isfinite(ratio) && c.slack >= 0.0;
    return c;
}

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::size_t VerificationReport::failed() const { return cases.size() - passed(); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

VerificationReport run_suite(const SuiteConfig& config) {
    config.validate();
    VerificationReport rep;
    rep.suite = config.suite;
    rep.config = config;
    const Ctx ctx{config, rep.cases};
    registry().at(config.suite)(ctx);
    return rep;
}

} // namespace dfun
