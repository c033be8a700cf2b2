#include "doctest.h"

#include "dfun/families.hpp"
#include "dfun/integration.hpp"
#include "dfun/random.hpp"
#include "dfun/rearrangement.hpp"

#include <cmath>
#include <stdexcept>

using namespace dfun;

TEST_CASE("the extremal families are their own rearrangement") {
    const GridFunction a = sample(AnalyticFamily(OneDExtremalA{-0.5}), BoxDomain::cube(1, 0, 50, 501));
    const GridFunction b = sample(AnalyticFamily(OneDExtremalB{-2}), BoxDomain::cube(1, 0, 1, 257));
    for (const GridFunction* f : {&a, &b}) {
        const GridFunction s = star_rearrangement(*f);
        const std::size_t n = f->size();
        REQUIRE(s.size() == 2 * n - 1);
        CHECK(s.domain().point(n - 1)[0] == 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(s.value(n - 1 + i) == f->value(i));
            if (i > 0) CHECK(s.value(n - 1 - i) == 0.0);
        }
    }
}

TEST_CASE("an interval indicator rearranges to [0, b - a]") {
    const BoxDomain d = BoxDomain::cube(1, -2, 3, 51);
    const GridFunction f = GridFunction::from_function(d, [](const Point& x) { return x[0] >= -0.5 && x[0] <= 1.3 ? 2.0 : 0.0; });
    const GridFunction s = star_rearrangement(f);
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double z = s.domain().point(k)[0];
        CHECK(s.value(k) == (z >= -1e-9 && z <= 1.8 + 1e-9 ? 2.0 : 0.0));
    }
}

TEST_CASE("rearrangement is nonincreasing and keeps the supremum") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GridFunction f = generate_random_alpha_concave(seed, 1, 2, -1.0, LogConcaveParams{129, 4.0});
        const GridFunction s = star_rearrangement(f);
        const std::size_t mid = f.size() - 1;
        CHECK(s.value(mid) == sup_value(f).value.value());
        for (std::size_t k = mid + 1; k < s.size(); ++k) CHECK(s.value(k) <= s.value(k - 1));
    }
}

TEST_CASE("rearrangement report") {
    const GridFunction a = sample(AnalyticFamily(OneDExtremalA{-0.5}), BoxDomain::cube(1, 0, 100, 1025));
    const RearrangementReport ra = check_rearrangement(a, AlphaParam::finite(-0.5));
    for (std::size_t i = 0; i < 6; ++i) {
        INFO(RearrangementReport::property_name(i) << " gap " << ra.properties[i].gap);
        CHECK(ra.properties[i].pass);
    }
    CHECK(ra.ratio_star == doctest::Approx(ra.ratio_formula).epsilon(0.02));
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const double alpha = seed % 2 ? -0.5 : -2.0;
        const GridFunction f = generate_random_alpha_concave(seed, 1, 1 + seed % 3, alpha, LogConcaveParams{257, 5.0});
        const RearrangementReport r = check_rearrangement(f, AlphaParam::finite(alpha));
        INFO("seed " << seed);
        CHECK(r.all_pass());
        CHECK(r.ratio_f <= r.ratio_star * 1.02);
    }
    CHECK(std::string(RearrangementReport::property_name(5)) == "dominates-delta");
}

TEST_CASE("rearrangement rejects unsupported input") {
    CHECK_THROWS_AS(star_rearrangement(generate_random_logconcave(1, 2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(check_rearrangement(generate_random_logconcave(1, 1, 2), AlphaParam::zero()), std::invalid_argument);
}

TEST_CASE("a -1-concave bump passes every property") {
    const GridFunction f = GridFunction::from_function(BoxDomain::cube(1, -10, 12, 881), [](const Point& x) {
        return 1.0 / (1.0 + (x[0] - 1.3) * (x[0] - 1.3));
    });
    const RearrangementReport r = check_rearrangement(f, AlphaParam::finite(-1.0));
    for (std::size_t i = 0; i < 6; ++i) {
        INFO(RearrangementReport::property_name(i) << " gap " << r.properties[i].gap << " tol " << r.properties[i].tolerance);
        CHECK(r.properties[i].pass);
    }
}

TEST_CASE("rearrangement keeps the measure of an interval indicator") {
    const BoxDomain d = BoxDomain::cube(1, -2, 3, 201);
    const GridFunction f = GridFunction::from_function(d, [](const Point& x) { return x[0] >= -0.5 && x[0] <= 1.3 ? 2.0 : 0.0; });
    const GridFunction s = star_rearrangement(f);
    CHECK(std::abs(superlevel_volume(f, 1.0) - 1.8) <= d.spacing(0));
    CHECK(std::abs(superlevel_volume(s, 1.0) - 1.8) <= d.spacing(0));
}
