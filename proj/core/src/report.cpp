#include "dfun/suites.hpp"

#include "json.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace dfun {

namespace {

using nlohmann::ordered_json;

// JSON has no infinity; non-finite numbers become null
ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json config_json(const SuiteConfig& c) {
    ordered_json j;
    j["suite"] = c.suite;
    j["dim"] = c.dim;
    j["nodes"] = c.nodes;
    j["halfwidth"] = c.half_width;
    j["alpha"] = c.alpha ? number(*c.alpha) : ordered_json(nullptr);
    j["seed"] = c.seed;
    j["tol"] = c.tol ? number(*c.tol) : ordered_json(nullptr);
    j["instances"] = c.instances;
    if (!c.polytope_path.empty()) j["polytope"] = c.polytope_path;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

} // namespace

std::string to_json(const VerificationReport& report, bool with_timing) {
    ordered_json j;
    j["suite"] = report.suite;
    j["config"] = config_json(report.config);
    ordered_json cases = ordered_json::array();
    for (const CaseResult& c : report.cases) {
        ordered_json e;
        e["id"] = c.id;
        e["descriptor"] = c.descriptor;
        e["kind"] = check_kind_name(c.kind);
        e["ratio"] = number(c.ratio);
        e["bound"] = number(c.bound);
        if (c.kind == CheckKind::Range) e["bound_hi"] = number(c.bound_hi);
        e["tol"] = number(c.tol);
        e["slack"] = number(c.slack);
        e["pass"] = c.pass;
        e["tail_estimate"] = number(c.tail_estimate);
        if (with_timing) e["ms"] = number(c.ms);
        e["grid"] = c.grid;
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    j["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}};
    return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report, bool with_timing) {
    std::ostringstream os;
    os << "suite,id,descriptor,kind,ratio,bound,bound_hi,tol,slack,pass,tail_estimate," << (with_timing ? "ms," : "")
       << "grid\n";
    for (const CaseResult& c : report.cases) {
        os << csv_field(report.suite) << ',' << csv_field(c.id) << ',' << csv_field(c.descriptor) << ','
           << check_kind_name(c.kind) << ',' << num(c.ratio) << ',' << num(c.bound) << ',' << num(c.bound_hi) << ','
           << num(c.tol) << ',' << num(c.slack) << ',' << (c.pass ? "true" : "false") << ',' << num(c.tail_estimate)
           << ',';
        if (with_timing) os << num(c.ms) << ',';
        os << csv_field(c.grid) << '\n';
    }
    return os.str();
}

} // namespace dfun
