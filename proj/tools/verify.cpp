// verify: runs one inequality suite and writes a JSON or CSV report.
#include "dfun/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    dfun::SuiteConfig cfg;
    std::string out_path, format = "json";
    double alpha = 0.0, tol = 0.0;

    CLI::App app{"Numerical verification of difference-function and body inequalities"};
    std::string suites_help = "Suite id:";
    for (const auto& s : dfun::suite_names()) suites_help += " " + s;
    app.add_option("suite", cfg.suite, suites_help)->required();
    app.add_option("--dim", cfg.dim, "Dimension (default: the suite's dimensions)")->check(CLI::Range(1, 3));
    app.add_option("--nodes", cfg.nodes, "Grid nodes per axis (>= 33)");
    app.add_option("--halfwidth", cfg.half_width, "Box half-width");
    auto* alpha_opt = app.add_option("--alpha", alpha, "Mean order alpha (< 0)");
    app.add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
    auto* tol_opt = app.add_option("--tol", tol, "Relative tolerance override in (0, 0.2]");
    app.add_option("--instances", cfg.instances, "Instance count for randomized suites");
    app.add_option("--polytope", cfg.polytope_path, "Polytope file (one vertex per line)");
    app.add_option("--out", out_path, "Report file (default: stdout)");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (*alpha_opt) cfg.alpha = alpha;
    if (*tol_opt) cfg.tol = tol;

    try {
        const dfun::VerificationReport rep = dfun::run_suite(cfg);
        const std::string text = format == "csv" ? dfun::to_csv(rep) : dfun::to_json(rep);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("cannot write " + out_path);
            os << text;
        }
        std::cerr << rep.suite << ": " << rep.passed() << " passed, " << rep.failed() << " failed\n";
        return rep.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return 2;
    }
}
