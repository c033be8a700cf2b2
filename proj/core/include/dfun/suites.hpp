#pragma once

#include "dfun/box_domain.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dfun {

/// How a measured ratio is compared with its bound, given a relative
/// tolerance tol:
///   Upper  ratio <= bound (1 + tol)
///   Lower  ratio >= bound (1 - tol)
///   Equal  |ratio - bound| <= tol bound
///   Range  bound (1 - tol) <= ratio <= bound_hi (1 + tol)
enum class CheckKind { Upper, Lower, Equal, Range };

const char* check_kind_name(CheckKind k);

struct SuiteConfig {
    std::string suite;
    /// 0 runs the suite's default dimensions.
    int dim = 0;
    /// Nodes per axis; 0 uses the suite default. Must be >= 33 when set.
    std::size_t nodes = 0;
    /// Box half-width; 0 uses the suite default.
    double half_width = 0.0;
    std::optional<double> alpha;
    std::uint64_t seed = 1;
    /// Overrides every case tolerance; must lie in (0, 0.2].
    std::optional<double> tol;
    /// Instance count for the randomized suites; 0 uses the default.
    std::size_t instances = 0;
    /// Optional polytope file for the body suites.
    std::string polytope_path;

    /// Throws std::invalid_argument on an unknown suite or an invariant breach.
    void validate() const;
};

struct CaseResult {
    std::string id;
    std::string descriptor;
    CheckKind kind = CheckKind::Upper;
    double ratio = 0.0;
    double bound = 0.0;
    /// Upper end for Range checks, equal to bound otherwise.
    double bound_hi = 0.0;
    double tol = 0.0;
    /// Distance to the failure threshold relative to the bound; >= 0 iff pass.
    double slack = 0.0;
    bool pass = false;
    /// Relative mass estimate beyond the box (0 for exact geometric cases).
    double tail_estimate = 0.0;
    double ms = 0.0;
    std::string grid;
};

/// Evaluates kind/tol against ratio and fills slack and pass.
CaseResult make_case(std::string id, std::string descriptor, CheckKind kind, double ratio, double bound,
                     double bound_hi, double tol);

struct VerificationReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CaseResult> cases;
    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
};

const std::vector<std::string>& suite_names();

/// Validates the config and runs the suite. Cases run in a fixed order; the
/// report is identical across runs apart from the ms fields.
VerificationReport run_suite(const SuiteConfig& config);

/// {suite, config, cases:[...], summary{passed, failed}}; timing omitted when
/// with_timing is false.
std::string to_json(const VerificationReport& report, bool with_timing = true);
std::string to_csv(const VerificationReport& report, bool with_timing = true);

} // namespace dfun
