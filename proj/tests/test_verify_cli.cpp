#include "doctest.h"

#include "json.hpp"

#include "dfun/families.hpp"
#include "dfun/integration.hpp"
#include "dfun/io.hpp"
#include "dfun/random.hpp"
#include "dfun/suites.hpp"
#include "dfun/transforms.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>

using namespace dfun;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int run_verify(const std::string& args) {
    const std::string cmd = std::string(DFUN_VERIFY_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("counter RNG is deterministic") {
    // first SplitMix64 output for seed 0
    CHECK(CounterRng(0).next() == 0xE220A8397B1DCDAFULL);
    CounterRng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
    CHECK(a.counter() == 1000);
    CounterRng c(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = c.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(CounterRng(42).fork(1).next() != CounterRng(42).fork(2).next());
    CHECK(CounterRng(42).fork(1).next() == CounterRng(42).fork(1).next());
}

TEST_CASE("random generators reproduce the golden files") {
    std::ostringstream g;
    write_grid(g, generate_random_logconcave(1, 1, 3));
    CHECK(g.str() == slurp(std::string(DFUN_GOLDEN_DIR) + "/logconcave_seed1_n1_k3.grid"));
    std::ostringstream p;
    write_polytope(p, generate_random_polytope(1, 2, 3));
    CHECK(p.str() == slurp(std::string(DFUN_GOLDEN_DIR) + "/polytope_seed1_n2_m3.txt"));
}

TEST_CASE("random instances satisfy their invariants") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CHECK(is_alpha_concave(generate_random_logconcave(seed, 2, 3, LogConcaveParams{33, 4.0}), AlphaParam::zero(), 1e-12).concave);
        CHECK(is_alpha_concave(generate_random_alpha_concave(seed, 1, 2, -2.0), AlphaParam::finite(-2.0), 1e-12).concave);
        const Polytope q = generate_random_centered_polytope(seed, 3, 8);
        CHECK_FALSE(q.degenerate());
        CHECK(q.contains(Point{}));
    }
    CHECK_THROWS_AS(generate_random_logconcave(1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_random_logconcave(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_random_polytope(1, 3, 3), std::invalid_argument);
}

TEST_CASE("grid and polytope files round trip") {
    const double inf = std::numeric_limits<double>::infinity();
    const GridFunction f(BoxDomain(2, {Axis{-1, 2, 3}, Axis{0.1, 0.7, 2}}), {0.1, 1.0 / 3.0, inf, 0.0, 2e-300, 7.25});
    std::stringstream s;
    write_grid(s, f);
    const GridFunction r = read_grid(s);
    CHECK(r.domain() == f.domain());
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(r.value(k) == f.value(k));

    const Polytope p = generate_random_polytope(3, 3, 9);
    std::stringstream t;
    t << "# comment\n\n";
    write_polytope(t, p);
    const Polytope q = read_polytope(t);
    CHECK(q.vertices() == p.vertices());

    std::istringstream bad("# dfun-grid v1\ndim 1\naxis 0 0 1 3\nvalues\n1\n2\n");
    CHECK_THROWS(read_grid(bad));
    CHECK_THROWS(load_polytope("/nonexistent/body.txt"));
}

TEST_CASE("config validation") {
    SuiteConfig c;
    c.suite = "no-such-suite";
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.suite = "rs-body-simplex";
    CHECK_NOTHROW(c.validate());
    c.nodes = 10;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.nodes = 0;
    for (double bad : {0.0, -0.1, 0.3}) {
        c.tol = bad;
        CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    }
    c.tol.reset();
    for (double bad : {0.5, 0.0}) {
        c.alpha = bad;
        CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    }
    c.alpha = -1.0;
    CHECK_NOTHROW(c.validate());
    CHECK(suite_names().size() == 13);
}

TEST_CASE("make_case thresholds") {
    CHECK(make_case("a", "", CheckKind::Upper, 4.07, 4, 4, 0.02).pass);
    CHECK_FALSE(make_case("a", "", CheckKind::Upper, 4.09, 4, 4, 0.02).pass);
    CHECK(make_case("a", "", CheckKind::Lower, 0.99, 1, 1, 0.02).pass);
    CHECK_FALSE(make_case("a", "", CheckKind::Equal, 2.1, 2, 2, 0.02).pass);
    const CaseResult r = make_case("a", "", CheckKind::Range, 5, 4, 6, 1e-12);
    CHECK(r.pass);
    CHECK(r.slack > 0);
    CHECK_FALSE(make_case("a", "", CheckKind::Range, 6.1, 4, 6, 1e-12).pass);
}

TEST_CASE("reports are deterministic apart from timing") {
    SuiteConfig c;
    c.suite = "rs-body-random";
    c.instances = 10;
    c.seed = 5;
    const VerificationReport a = run_suite(c), b = run_suite(c);
    CHECK(to_json(a, false) == to_json(b, false));
    CHECK(to_csv(a, false) == to_csv(b, false));
    const nlohmann::json j = nlohmann::json::parse(to_json(a));
    CHECK(j["suite"] == "rs-body-random");
    CHECK(j["cases"].size() == a.cases.size());
    CHECK(j["summary"]["passed"] == a.passed());
    c.seed = 6;
    CHECK(to_json(run_suite(c), false) != to_json(a, false));
}

TEST_CASE("CLI exit codes") {
    CHECK(run_verify("rs-body-simplex --dim 2") == 0);
    CHECK(run_verify("rs-body-simplex --polytope " + std::string(DFUN_GOLDEN_DIR) + "/polytope_seed1_n2_m3.txt --format csv") == 0);
    // a 33-node grid is far too coarse for the polar identity
    CHECK(run_verify("polar-identity --dim 1 --nodes 33") == 1);
    CHECK(run_verify("no-such-suite") == 2);
    CHECK(run_verify("rs-body-simplex --nodes 10") == 2);
    CHECK(run_verify("rs-body-simplex --format xml") == 2);
    CHECK(run_verify("rs-body-simplex --polytope /nonexistent/body.txt") == 2);
    CHECK(run_verify("") == 2);
}

TEST_CASE("extremal ratio converges under refinement") {
    // same-spacing output: the singular node costs O(sqrt h)
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t n : {257u, 513u, 1025u}) {
        const GridFunction f = sample(AnalyticFamily(OneDExtremalB{-2}), BoxDomain::cube(1, 0, 1, n));
        const GridFunction d = difference_function(f, AlphaParam::finite(-2.0), Route::Direct);
        const double err = std::abs(integrate(d).value / integrate(f).value - std::sqrt(2.0));
        INFO("nodes " << n << " error " << err);
        CHECK(err < prev / 1.2);
        prev = err;
    }
    CHECK(prev < 0.02);
}

TEST_CASE("random polytopes with n + 1 points are simplices") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CHECK(generate_random_polytope(seed, 2, 3).vertices().size() == 3);
        CHECK(generate_random_polytope(seed, 3, 4).vertices().size() == 4);
        const Polytope p = generate_random_polytope(seed, 2, 9);
        const Polytope q = convex_hull(2, p.vertices());
        CHECK(q.vertices() == p.vertices());
    }
}

TEST_CASE("suite examples") {
    SuiteConfig c;
    c.suite = "rs-functional-extremal";
    c.dim = 2;
    VerificationReport r = run_suite(c);
    REQUIRE(r.cases.size() == 1);
    CHECK(r.cases[0].ratio == doctest::Approx(4.0).epsilon(0.02));
    CHECK(r.all_pass());

    c = SuiteConfig{};
    c.suite = "rs-body-simplex";
    c.dim = 3;
    r = run_suite(c);
    REQUIRE(r.cases.size() == 1);
    CHECK(r.cases[0].ratio == doctest::Approx(20.0).epsilon(1e-9));
    CHECK(r.all_pass());

    c = SuiteConfig{};
    c.suite = "alpha-1d";
    c.alpha = -0.5;
    c.instances = 2;
    r = run_suite(c);
    CHECK(r.all_pass());
    CHECK(r.cases[0].ratio == doctest::Approx(2.0).epsilon(0.02));
}
