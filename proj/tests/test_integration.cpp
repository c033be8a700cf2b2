#include "doctest.h"

#include "dfun/families.hpp"
#include "dfun/integration.hpp"
#include "dfun/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

using namespace dfun;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

GridFunction scaled(const GridFunction& f, double c) {
    std::vector<double> v(f.values().begin(), f.values().end());
    for (double& x : v) x *= c;
    return GridFunction(f.domain(), v);
}
} // namespace

TEST_CASE("integration examples") {
    const BoxDomain sq = BoxDomain::cube(2, 0, 2, 5);
    CHECK(integrate(GridFunction(sq, std::vector<double>(sq.size(), 1.0))).value == doctest::Approx(4.0));
    // the cell rule is exact for multilinear functions
    const BoxDomain c = BoxDomain::cube(3, -1, 2, 7);
    const GridFunction m = GridFunction::from_function(c, [](const Point& x) { return (x[0] + 2) * (x[1] + 3) * (x[2] + 1.5); });
    CHECK(integrate(m).value == doctest::Approx(7.5 * 10.5 * 6.0).epsilon(1e-12));
    // a single +inf node contributes the largest finite corner of its cell
    const GridFunction spike(BoxDomain::cube(1, 0, 2, 3), {kInf, 1.0, 0.0});
    CHECK(integrate(spike).value == doctest::Approx(1.5));
    const GridFunction g = sample(AnalyticFamily(Gaussian{1, Point{}, 1.0}), BoxDomain::centered(1, 10, 2001));
    CHECK(integrate(g).value == doctest::Approx(std::sqrt(2 * std::numbers::pi)).epsilon(1e-6));
    CHECK(integrate(g).tail_estimate < 1e-15);
}

TEST_CASE("adjacent infinite nodes are rejected") {
    const GridFunction bad(BoxDomain::cube(1, 0, 3, 4), {kInf, kInf, 1.0, 1.0});
    CHECK_THROWS_AS(integrate(bad), std::domain_error);
    const GridFunction b2(BoxDomain::cube(2, 0, 1, 2), {kInf, 1.0, 1.0, kInf});
    CHECK_THROWS_AS(integrate(b2), std::domain_error);
}

TEST_CASE("integration is linear and monotone") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const GridFunction f = generate_random_logconcave(seed, 2, 3, LogConcaveParams{33, 4.0});
        const GridFunction g = generate_random_logconcave(seed + 100, 2, 2, LogConcaveParams{33, 4.0});
        std::vector<double> sum(f.size()), mx(f.size());
        for (std::size_t k = 0; k < f.size(); ++k) {
            sum[k] = 2.0 * f.value(k) + 0.5 * g.value(k);
            mx[k] = std::max(f.value(k), g.value(k));
        }
        const double If = integrate(f).value, Ig = integrate(g).value;
        CHECK(integrate(GridFunction(f.domain(), sum)).value == doctest::Approx(2 * If + 0.5 * Ig).epsilon(1e-12));
        CHECK(integrate(scaled(f, 3.0)).value == doctest::Approx(3 * If).epsilon(1e-12));
        const double Im = integrate(GridFunction(f.domain(), mx)).value;
        CHECK(Im >= If);
        CHECK(Im >= Ig);
    }
}

TEST_CASE("layer cake agrees with the cell rule") {
    const GridFunction f = sample(AnalyticFamily(Gaussian{2, Point{0.2, 0.1}, 1.0}), BoxDomain::centered(2, 6, 121));
    const double direct = integrate(f).value;
    const double lc = layer_cake(f, geometric_levels(f.max_finite(), 4000, 1e-12));
    CHECK(lc == doctest::Approx(direct).epsilon(1e-3));
    CHECK(superlevel_volume(f, f.max_finite()) == 0.0);
    CHECK(superlevel_volume(f, 0.0) == doctest::Approx(144.0));
    CHECK_THROWS_AS(layer_cake(f, std::vector<double>{1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(layer_cake(f, std::vector<double>{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("geometric levels and pairwise sums") {
    const std::vector<double> l = geometric_levels(2.0, 5, 1e-4);
    CHECK(l.front() == 2.0);
    CHECK(l.back() == doctest::Approx(2e-4));
    for (std::size_t k = 1; k < l.size(); ++k) CHECK(l[k] / l[k - 1] == doctest::Approx(0.1));
    CHECK_THROWS_AS(geometric_levels(0.0), std::invalid_argument);
    std::vector<double> xs(1000, 0.1);
    CHECK(pairwise_sum(xs) == doctest::Approx(100.0).epsilon(1e-14));
}

TEST_CASE("tail estimate") {
    // e^{-x} truncated at 5: true tail e^{-5}
    const GridFunction f = GridFunction::from_function(BoxDomain::cube(1, 0, 5, 501), [](const Point& x) { return std::exp(-x[0]); });
    const double tail = tail_estimate(f);
    CHECK(tail == doctest::Approx(std::exp(-5.0) + 1.0 * 0.01).epsilon(0.02));
}

TEST_CASE("layer cake examples") {
    // vertices a quarter cell off the nodes; on the nodes the lattice-point
    // bias of the cell rule alone is about 1.5 h
    const double q = 0.25 * 2.0 / 160;
    const BoxDomain d = BoxDomain::cube(2, -0.5 + q, 1.5 + q, 161);
    const GridFunction tri = sample(AnalyticFamily(SimplexIndicator{2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}}), d);
    CHECK(std::abs(layer_cake(tri, geometric_levels(1.0)) - 0.5) <= d.spacing(0));

    const GridFunction e = sample(AnalyticFamily(OrthantExp{1}), BoxDomain::cube(1, 0, 30, 3001));
    CHECK(layer_cake(e, geometric_levels(1.0)) == doctest::Approx(1.0).epsilon(0.02));
    CHECK(layer_cake(e, geometric_levels(1.0)) == doctest::Approx(integrate(e).value).epsilon(0.02));

    const BoxDomain b = BoxDomain::cube(3, 0, 2, 9);
    const GridFunction c(b, std::vector<double>(b.size(), 2.5));
    const std::vector<double> levels = geometric_levels(2.5);
    CHECK(std::abs(layer_cake(c, levels) - 2.5 * 8.0) <= (levels[0] - levels[1]) * 8.0);
}

TEST_CASE("integral examples") {
    // the jump at 0 costs h/2 under the cell rule, so 0.5% needs h < 0.01
    const GridFunction e = sample(AnalyticFamily(OrthantExp{1}), BoxDomain::cube(1, -1, 30, 4097));
    CHECK(integrate(e).value == doctest::Approx(1.0).epsilon(0.005));
    for (int n : {1, 2}) {
        const GridFunction a = sample(AnalyticFamily(AbsExp{n}), BoxDomain::centered(n, 30, 601));
        CHECK(integrate(a).value == doctest::Approx(std::pow(2.0, n)).epsilon(0.005));
    }
    const double q = 0.25 * 2.0 / 160;
    const BoxDomain d = BoxDomain::cube(2, -0.5 + q, 1.5 + q, 161);
    const GridFunction tri = sample(AnalyticFamily(SimplexIndicator{2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}}), d);
    CHECK(std::abs(integrate(tri).value - 0.5) <= d.spacing(0));
}

TEST_CASE("superlevel volume examples") {
    const double q = 0.25 * 2.0 / 160;
    const BoxDomain d = BoxDomain::cube(2, -0.5 + q, 1.5 + q, 161);
    const GridFunction tri = sample(AnalyticFamily(SimplexIndicator{2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}}), d);
    CHECK(std::abs(superlevel_volume(tri, 0.5) - 0.5) <= d.spacing(0));
    const GridFunction g = sample(AnalyticFamily(Gaussian{2, Point{}, 1.0}), BoxDomain::centered(2, 4, 81));
    CHECK(superlevel_volume(g, 1.0) == 0.0);
    const BoxDomain l = BoxDomain::cube(1, -1, 5, 601);
    const GridFunction e = sample(AnalyticFamily(OrthantExp{1}), l);
    // the cell straddling the jump has mean 1/2 and counts: exactly 1 + h
    CHECK(std::abs(superlevel_volume(e, std::exp(-1.0)) - 1.0) <= l.spacing(0) * (1 + 1e-9));
}

TEST_CASE("layer cake and the cell rule agree on the gallery") {
    const std::vector<GridFunction> gallery = {
        sample(AnalyticFamily(Gaussian{1, Point{0.3}, 1.0}), BoxDomain::centered(1, 6, 241)),
        sample(AnalyticFamily(OrthantExp{1}), BoxDomain::cube(1, -1, 20, 421)),
        sample(AnalyticFamily(AbsExp{2}), BoxDomain::centered(2, 8, 161)),
        sample(AnalyticFamily(OneDExtremalA{-0.5}), BoxDomain::cube(1, -1, 40, 821)),
        sample(AnalyticFamily(SimplexIndicator{2, {Point{-1, -1}, Point{2, -1}, Point{-1, 2}}}), BoxDomain::centered(2, 3, 97)),
        generate_random_logconcave(2, 2, 3),
    };
    for (const GridFunction& f : gallery) {
        const std::vector<double> levels = geometric_levels(f.max_finite());
        const double step = 1.0 - levels[1] / levels[0];
        const BoxDomain& d = f.domain();
        double h = 0.0, perimeter = 0.0;
        for (int a = 0; a < d.dim(); ++a) {
            h = std::max(h, d.spacing(a));
            double face = 2.0;
            for (int b = 0; b < d.dim(); ++b)
                if (b != a) face *= d.axis(b).upper - d.axis(b).lower;
            perimeter += face;
        }
        const double I = integrate(f).value;
        const double gap = std::abs(layer_cake(f, levels) - I);
        INFO("gap " << gap << " integral " << I);
        CHECK(gap <= (step + h * perimeter / d.volume()) * I);
    }
}
