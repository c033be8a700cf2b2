#pragma once

#include "dfun/grid_function.hpp"
#include "dfun/polytope.hpp"

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace dfun {

/// e^{-(x_1+...+x_n)} on the nonnegative orthant, 0 elsewhere.
struct OrthantExp {
    int dim = 1;
};

/// e^{-(|z_1|+...+|z_n|)}.
struct AbsExp {
    int dim = 1;
};

/// exp(-|x - center|^2 / (2 width^2)).
struct Gaussian {
    int dim = 1;
    Point center{};
    double width = 1.0;
};

/// Indicator of the closed simplex spanned by n+1 vertices.
struct SimplexIndicator {
    int dim = 2;
    std::vector<Point> vertices;
};

/// Indicator of a closed polytope.
struct PolytopeIndicator {
    Polytope body;
};

/// (1+x)^{1/alpha} for x >= 0, 0 for x < 0; alpha in (-1, 0).
struct OneDExtremalA {
    double alpha = -0.5;
};

/// x^{1/alpha} on (0, 1), +inf at 0, 0 elsewhere; alpha <= -1.
struct OneDExtremalB {
    double alpha = -2.0;
};

/// e^{-h_K} for the support function h_K of a polytope.
struct SupportExp {
    Polytope body;
};

struct AffineImage;

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// A closed-form function from the gallery. Constructors of the variant
/// alternatives do no validation; make_family() checks the invariants.
class AnalyticFamily {
public:
    using Variant = std::variant<OrthantExp, AbsExp, Gaussian, SimplexIndicator, PolytopeIndicator,
                                 OneDExtremalA, OneDExtremalB, SupportExp, std::shared_ptr<const AffineImage>>;

    /// Throws std::invalid_argument when the alternative's invariants fail.
    AnalyticFamily(Variant v);

    int dim() const;
    double operator()(const Point& x) const;
    std::string describe() const;
    const Variant& variant() const { return v_; }

private:
    Variant v_;
};

/// x -> scale * inner(A x + shift).
struct AffineImage {
    AnalyticFamily inner;
    Matrix3 matrix{};
    Point shift{};
    double scale = 1.0;
};

AnalyticFamily affine_image(AnalyticFamily inner, const Matrix3& a, const Point& shift, double scale);

double determinant(const Matrix3& a, int dim);
Matrix3 identity_matrix();

/// Node-wise exact evaluation; throws on a dimension mismatch.
GridFunction sample(const AnalyticFamily& family, const BoxDomain& domain);

} // namespace dfun
