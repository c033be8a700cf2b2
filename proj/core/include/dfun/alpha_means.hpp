#pragma once

#include <compare>
#include <limits>
#include <string>

namespace dfun {

/// A value in [0, +inf]. Construction rejects negatives and NaN.
class ExtValue {
public:
    constexpr ExtValue() = default;
    explicit ExtValue(double v);

    static constexpr ExtValue infinity() { return ExtValue(Raw{}, std::numeric_limits<double>::infinity()); }
    static constexpr ExtValue zero() { return ExtValue(); }

    constexpr double value() const { return v_; }
    constexpr bool is_infinite() const { return v_ == std::numeric_limits<double>::infinity(); }
    constexpr bool is_zero() const { return v_ == 0.0; }

    friend constexpr auto operator<=>(ExtValue a, ExtValue b) {
        // total: values are never NaN
        return a.v_ < b.v_ ? std::strong_ordering::less
             : a.v_ > b.v_ ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }
    friend constexpr bool operator==(ExtValue a, ExtValue b) { return a.v_ == b.v_; }

private:
    struct Raw {};
    constexpr ExtValue(Raw, double v) : v_(v) {}
    double v_ = 0.0;
};

/// Order of a power mean, alpha in [-inf, 0].
class AlphaParam {
public:
    enum class Regime { Zero, Finite, MinusInfinity };

    static constexpr AlphaParam zero() { return AlphaParam(Regime::Zero, 0.0); }
    static constexpr AlphaParam minus_infinity() {
        return AlphaParam(Regime::MinusInfinity, -std::numeric_limits<double>::infinity());
    }
    /// Requires a < 0 and finite.
    static AlphaParam finite(double a);
    /// 0 -> Zero, -inf -> MinusInfinity, negative -> Finite; positive or NaN throws.
    static AlphaParam from_double(double a);

    constexpr Regime regime() const { return regime_; }
    constexpr double value() const { return alpha_; }
    constexpr bool is_zero() const { return regime_ == Regime::Zero; }
    constexpr bool is_finite() const { return regime_ == Regime::Finite; }
    constexpr bool is_minus_infinity() const { return regime_ == Regime::MinusInfinity; }

    std::string to_string() const;

    friend constexpr bool operator==(AlphaParam, AlphaParam) = default;

private:
    constexpr AlphaParam(Regime r, double a) : regime_(r), alpha_(a) {}
    Regime regime_;
    double alpha_;
};

/// Mean of order alpha of a and b with weight t on a.
///
/// Conventions: for a finite alpha the mean is 0 as soon as one argument is 0;
/// with exactly one argument +inf the finite-weight limit (w c^alpha)^(1/alpha)
/// is returned, which is c / 2^(1/alpha) at t = 1/2. For alpha = 0 a vanishing
/// argument wins over an infinite one.
///
/// Throws std::domain_error if t is outside [0, 1].
ExtValue mean_alpha(ExtValue a, ExtValue b, double t, AlphaParam alpha);

/// mean_alpha(a, b, 1/2, alpha).
ExtValue mean_alpha_symmetric(ExtValue a, ExtValue b, AlphaParam alpha);

/// Raw-double fast path of mean_alpha_symmetric for kernels; inputs must be
/// valid ExtValue payloads.
double mean_alpha_symmetric(double a, double b, AlphaParam alpha);

/// x^alpha with 0^alpha = +inf and (+inf)^alpha = 0 (alpha < 0). The map is
/// order-reversing, which turns alpha-concavity into convexity.
double alpha_power(double x, double alpha);

/// Inverse of alpha_power: u^(1/alpha) with 0 -> +inf and +inf -> 0.
double alpha_root(double u, double alpha);

/// 2^(-1/alpha): the constant in M_alpha(a, b; 1/2) <= 2^(-1/alpha) min(a, b).
double min_domination_constant(double alpha);

} // namespace dfun
