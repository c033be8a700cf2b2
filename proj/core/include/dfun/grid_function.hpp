#pragma once

#include "dfun/alpha_means.hpp"
#include "dfun/box_domain.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace dfun {

/// A nonnegative function sampled on a BoxDomain, with its log-representation
/// v = -log f cached node by node (v = +inf where f = 0, v = -inf where f = +inf).
///
/// Immutable after construction. Construction rejects NaN or negative node
/// values, and functions that vanish on every node.
class GridFunction {
public:
    GridFunction(BoxDomain domain, std::vector<double> values);

    static GridFunction from_function(const BoxDomain& domain, const std::function<double(const Point&)>& fn);

    const BoxDomain& domain() const { return domain_; }
    int dim() const { return domain_.dim(); }
    std::size_t size() const { return values_.size(); }

    std::span<const double> values() const { return values_; }
    std::span<const double> log_values() const { return logs_; }
    double value(std::size_t k) const { return values_[k]; }
    double value(const Index& idx) const { return values_[domain_.flat(idx)]; }
    double log_value(std::size_t k) const { return logs_[k]; }

    std::size_t infinite_count() const { return infinite_count_; }
    /// Largest finite node value.
    double max_finite() const { return max_finite_; }

private:
    BoxDomain domain_;
    std::vector<double> values_;
    std::vector<double> logs_;
    std::size_t infinite_count_ = 0;
    double max_finite_ = 0.0;
};

/// Builds f = exp(-v) from log-values.
GridFunction from_log_values(const BoxDomain& domain, std::span<const double> logs);

/// x -> f(-x) on the reflected domain.
GridFunction reflect(const GridFunction& f);

struct SupValue {
    ExtValue value;
    Index argmax{};
};

/// Maximum node value; ties go to the lexicographically smallest node.
SupValue sup_value(const GridFunction& f);

struct ConcavityViolation {
    Index x{};
    Index y{};
    Index midpoint{};
    double value_at_midpoint = 0.0;
    double mean = 0.0;
};

struct ConcavityResult {
    bool concave = true;
    std::optional<ConcavityViolation> first_violation;
    /// Largest (mean - f(midpoint)) / scale seen, 0 if none positive.
    double worst_gap = 0.0;
};

/// Midpoint alpha-concavity test over every node pair whose midpoint is a node:
/// f(m) >= M_alpha(f(x), f(y); 1/2) - tol * scale, scale = largest finite value.
ConcavityResult is_alpha_concave(const GridFunction& f, AlphaParam alpha, double tol);

} // namespace dfun
