#include "dfun/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfun {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GridFunction::GridFunction(BoxDomain domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.size()) throw std::invalid_argument("GridFunction: value count does not match domain");
    logs_.resize(values_.size());
    bool any_positive = false;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        const double f = values_[k];
        if (std::isnan(f) || f < 0.0) throw std::invalid_argument("GridFunction: values must lie in [0, +inf]");
        if (f > 0.0) any_positive = true;
        if (f == kInf) {
            ++infinite_count_;
            logs_[k] = -kInf;
        } else {
            logs_[k] = f == 0.0 ? kInf : -std::log(f);
            if (f > max_finite_) max_finite_ = f;
        }
    }
    if (!any_positive) throw std::invalid_argument("GridFunction: function vanishes on every node");
}

GridFunction GridFunction::from_function(const BoxDomain& domain, const std::function<double(const Point&)>& fn) {
    std::vector<double> vals(domain.size());
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = fn(domain.point(k));
    return GridFunction(domain, std::move(vals));
}

GridFunction from_log_values(const BoxDomain& domain, std::span<const double> logs) {
    std::vector<double> vals(logs.size());
    for (std::size_t k = 0; k < logs.size(); ++k) vals[k] = std::exp(-logs[k]);
    return GridFunction(domain, std::move(vals));
}

GridFunction reflect(const GridFunction& f) {
    const BoxDomain& d = f.domain();
    std::vector<double> vals(f.size());
    for (std::size_t k = 0; k < vals.size(); ++k) {
        Index idx = d.unflat(k);
        for (int a = 0; a < d.dim(); ++a) idx[a] = d.count(a) - 1 - idx[a];
        vals[k] = f.value(d.flat(idx));
    }
    return GridFunction(d.reflected(), std::move(vals));
}

SupValue sup_value(const GridFunction& f) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < f.size(); ++k)
        if (f.value(k) > f.value(best)) best = k;
    return {ExtValue(f.value(best)), f.domain().unflat(best)};
}

ConcavityResult is_alpha_concave(const GridFunction& f, AlphaParam alpha, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_alpha_concave: negative tolerance");
    const BoxDomain& d = f.domain();
    const double scale = f.max_finite() > 0.0 ? f.max_finite() : 1.0;
    const double slack = tol * scale;
    ConcavityResult res;
    const long n0 = static_cast<long>(d.count(0)), n1 = static_cast<long>(d.count(1)), n2 = static_cast<long>(d.count(2));
    for (long m0 = 0; m0 < n0; ++m0)
        for (long m1 = 0; m1 < n1; ++m1)
            for (long m2 = 0; m2 < n2; ++m2) {
                const double fm = f.value(Index{std::size_t(m0), std::size_t(m1), std::size_t(m2)});
                const long r0 = std::min(m0, n0 - 1 - m0), r1 = std::min(m1, n1 - 1 - m1), r2 = std::min(m2, n2 - 1 - m2);
                for (long d0 = -r0; d0 <= r0; ++d0)
                    for (long d1 = -r1; d1 <= r1; ++d1)
                        for (long d2 = -r2; d2 <= r2; ++d2) {
                            const Index x{std::size_t(m0 - d0), std::size_t(m1 - d1), std::size_t(m2 - d2)};
                            const Index y{std::size_t(m0 + d0), std::size_t(m1 + d1), std::size_t(m2 + d2)};
                            const double mean = mean_alpha_symmetric(f.value(x), f.value(y), alpha);
                            if (fm >= mean) continue;
                            const double gap = mean == kInf ? kInf : (mean - fm) / scale;
                            if (gap > res.worst_gap) res.worst_gap = gap;
                            if (fm >= mean - slack) continue;
                            if (res.concave) {
                                res.concave = false;
                                res.first_violation = ConcavityViolation{x, y, {std::size_t(m0), std::size_t(m1), std::size_t(m2)}, fm, mean};
                            }
                        }
            }
    return res;
}

} // namespace dfun
