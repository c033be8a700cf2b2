#include "dfun/rearrangement.hpp"

#include "dfun/integration.hpp"
#include "dfun/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// |a - b| with equal infinities at distance 0
double gap(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b);
}

std::size_t count_above(std::span<const double> v, double s) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [s](double x) { return x > s; }));
}

double ratio(const GridFunction& num, const GridFunction& den) {
    return integrate(num).value / integrate(den).value;
}

// Values on the nonnegative half-axis [0, (count-1)h].
GridFunction half_line(std::span<const double> vals, double h) {
    return GridFunction(BoxDomain(1, {Axis{0.0, h * static_cast<double>(vals.size() - 1), vals.size()}}),
                        std::vector<double>(vals.begin(), vals.end()));
}

} // namespace

GridFunction star_rearrangement(const GridFunction& f) {
    if (f.dim() != 1) throw std::invalid_argument("star_rearrangement: one-dimensional input required");
    const std::size_t n = f.size();
    const double h = f.domain().spacing(0);
    const double w = h * static_cast<double>(n - 1);
    std::vector<double> out(2 * n - 1, 0.0);
    const auto v = f.values();
    for (std::size_t k = 0; k < n; ++k) {
        double best = 0.0;
        for (std::size_t i = k; i < n; ++i) best = std::max(best, std::min(v[i], v[i - k]));
        out[n - 1 + k] = best;
    }
    out[n - 1] = sup_value(f).value.value();
    return GridFunction(BoxDomain(1, {Axis{-w, w, 2 * n - 1}}), std::move(out));
}

bool RearrangementReport::all_pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyCheck& p) { return p.pass; });
}

const char* RearrangementReport::property_name(std::size_t i) {
    static const char* names[] = {"alpha-concave", "equimeasurable", "equal-integral",
                                  "decreasing", "closed-form-delta", "dominates-delta"};
    return i < 6 ? names[i] : "?";
}

RearrangementReport check_rearrangement(const GridFunction& f, AlphaParam alpha, const RearrangementTolerances& tol) {
    if (alpha.is_zero()) throw std::invalid_argument("check_rearrangement: alpha must be negative");
    const GridFunction star = star_rearrangement(f);
    const std::size_t n = f.size();
    const double h = f.domain().spacing(0);
    const auto sv = star.values();
    const std::span<const double> pos = sv.subspan(n - 1);
    const double scale = f.max_finite() > 0.0 ? f.max_finite() : 1.0;
    RearrangementReport rep;

    {
        double lip = 0.0;
        const auto v = f.values();
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (std::isfinite(v[i]) && std::isfinite(v[i + 1])) lip = std::max(lip, std::abs(v[i + 1] - v[i]) / h);
        const double t = std::max(1e-12, tol.concavity_cells * h * lip / scale);
        const ConcavityResult c = is_alpha_concave(star, alpha, t);
        rep.properties[0] = {c.concave, c.worst_gap, t};
    }
    {
        double worst = 0.0;
        for (double s : geometric_levels(scale, 32, 1e-4)) {
            const double a = h * static_cast<double>(count_above(pos, s));
            const double b = h * static_cast<double>(count_above(f.values(), s));
            worst = std::max(worst, std::abs(a - b));
        }
        const double t = tol.measure_cells * h;
        rep.properties[1] = {worst <= t * (1 + 1e-12), worst, t};
    }
    {
        const double a = integrate(half_line(pos, h)).value;
        const double b = integrate(f).value;
        const double t = tol.integral_cells * h * scale;
        rep.properties[2] = {std::abs(a - b) <= t, std::abs(a - b), t};
    }
    {
        double worst = 0.0;
        for (std::size_t k = 1; k < pos.size(); ++k)
            if (pos[k] > pos[k - 1]) worst = std::max(worst, pos[k] - pos[k - 1]);
        rep.properties[3] = {worst == 0.0, worst, 0.0};
    }

    DifferenceOptions opts;
    opts.output = difference_domain(f.domain());
    const GridFunction dstar = difference_function(star, alpha, Route::Direct, opts);
    const GridFunction df = difference_function(f, alpha, Route::Direct, opts);
    {
        double worst = 0.0;
        for (std::size_t j = 0; j < dstar.size(); ++j) {
            const double z = opts.output->point(j)[0];
            const auto k = static_cast<std::size_t>(std::lround(2.0 * std::abs(z) / h));
            const double far = k < pos.size() ? pos[k] : 0.0;
            const double m = mean_alpha_symmetric(pos[0], far, alpha);
            const double g = gap(dstar.value(j), m);
            worst = std::max(worst, std::isfinite(m) ? g / std::max(scale, m) : (g == 0.0 ? 0.0 : kInf));
        }
        rep.properties[4] = {worst <= tol.nodewise, worst, tol.nodewise};
    }
    {
        double worst = 0.0;
        for (std::size_t j = 0; j < dstar.size(); ++j) {
            const double a = dstar.value(j), b = df.value(j);
            if (a >= b) continue;
            worst = std::max(worst, (b - a) / std::max(scale, a));
        }
        rep.properties[5] = {worst <= tol.nodewise, worst, tol.nodewise};
    }

    rep.ratio_f = ratio(df, f);
    rep.ratio_star = integrate(dstar).value / integrate(half_line(pos, h)).value;
    {
        const std::size_t half = (pos.size() + 1) / 2;
        std::vector<double> m(half);
        for (std::size_t k = 0; k < half; ++k) m[k] = mean_alpha_symmetric(pos[0], pos[2 * k], alpha);
        rep.ratio_formula = 2.0 * integrate(half_line(m, h)).value / integrate(half_line(pos, h)).value;
    }
    return rep;
}

} // namespace dfun
