#include "dfun/alpha_means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dfun {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ExtValue::ExtValue(double v) : v_(v) {
    if (std::isnan(v)) throw std::invalid_argument("ExtValue: NaN");
    if (v < 0.0) throw std::invalid_argument("ExtValue: negative value");
}

AlphaParam AlphaParam::finite(double a) {
    if (!(a < 0.0) || !std::isfinite(a))
        throw std::invalid_argument("AlphaParam::finite requires a finite negative alpha");
    return AlphaParam(Regime::Finite, a);
}

AlphaParam AlphaParam::from_double(double a) {
    if (std::isnan(a) || a > 0.0) throw std::invalid_argument("alpha must lie in [-inf, 0]");
    if (a == 0.0) return zero();
    if (a == -kInf) return minus_infinity();
    return finite(a);
}

std::string AlphaParam::to_string() const {
    switch (regime_) {
    case Regime::Zero: return "0";
    case Regime::MinusInfinity: return "-inf";
    case Regime::Finite: break;
    }
    std::ostringstream os;
    os << alpha_;
    return os.str();
}

double alpha_power(double x, double alpha) {
    if (x == 0.0) return kInf;
    if (x == kInf) return 0.0;
    return std::exp(alpha * std::log(x));
}

double alpha_root(double u, double alpha) {
    if (u == 0.0) return kInf;
    if (u == kInf) return 0.0;
    return std::exp(std::log(u) / alpha);
}

double min_domination_constant(double alpha) { return std::exp2(-1.0 / alpha); }

namespace {

double geometric(double a, double b, double t) {
    if (t == 1.0) return a;
    if (t == 0.0) return b;
    if (a == 0.0 || b == 0.0) return 0.0;
    if (a == kInf || b == kInf) return kInf;
    return std::exp(t * std::log(a) + (1.0 - t) * std::log(b));
}

double power_mean(double a, double b, double t, double alpha) {
    if (a == 0.0 || b == 0.0) return 0.0;
    if (a == kInf && b == kInf) return kInf;
    if (a == kInf || b == kInf) {
        const double c = (a == kInf) ? b : a;
        const double w = (a == kInf) ? 1.0 - t : t;
        if (w == 0.0) return kInf;
        // (w c^alpha)^(1/alpha) = c * w^(1/alpha)
        return c * std::exp(std::log(w) / alpha);
    }
    if (t == 1.0) return a;
    if (t == 0.0) return b;
    // log-space: alpha may be huge in magnitude
    const double la = std::log(t) + alpha * std::log(a);
    const double lb = std::log1p(-t) + alpha * std::log(b);
    const double m = std::max(la, lb);
    const double lse = m + std::log(std::exp(la - m) + std::exp(lb - m));
    return std::exp(lse / alpha);
}

} // namespace

ExtValue mean_alpha(ExtValue a, ExtValue b, double t, AlphaParam alpha) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("mean_alpha: t outside [0, 1]");
    switch (alpha.regime()) {
    case AlphaParam::Regime::Zero: return ExtValue(geometric(a.value(), b.value(), t));
    case AlphaParam::Regime::MinusInfinity: return std::min(a, b);
    case AlphaParam::Regime::Finite: break;
    }
    return ExtValue(power_mean(a.value(), b.value(), t, alpha.value()));
}

ExtValue mean_alpha_symmetric(ExtValue a, ExtValue b, AlphaParam alpha) {
    return mean_alpha(a, b, 0.5, alpha);
}

double mean_alpha_symmetric(double a, double b, AlphaParam alpha) {
    switch (alpha.regime()) {
    case AlphaParam::Regime::Zero: return geometric(a, b, 0.5);
    case AlphaParam::Regime::MinusInfinity: return std::min(a, b);
    case AlphaParam::Regime::Finite: break;
    }
    return power_mean(a, b, 0.5, alpha.value());
}

} // namespace dfun
