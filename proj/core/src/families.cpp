#include "dfun/families.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Barycentric membership in a closed simplex.
bool in_simplex(const SimplexIndicator& s, const Point& x) {
    const int n = s.dim;
    // solve sum_k lambda_k (v_k - v_0) = x - v_0
    double m[3][4] = {};
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = s.vertices[c + 1][r] - s.vertices[0][r];
        m[r][n] = x[r] - s.vertices[0][r];
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        for (int k = 0; k <= n; ++k) std::swap(m[c][k], m[piv][k]);
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = m[r][c] / m[c][c];
            for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    const double eps = 1e-12;
    double total = 0.0;
    for (int c = 0; c < n; ++c) {
        const double l = m[c][n] / m[c][c];
        if (l < -eps) return false;
        total += l;
    }
    return total <= 1.0 + eps;
}

} // namespace

Matrix3 identity_matrix() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

double determinant(const Matrix3& a, int dim) {
    if (dim == 1) return a[0][0];
    if (dim == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

AnalyticFamily::AnalyticFamily(Variant v) : v_(std::move(v)) {
    std::visit(overloaded{
                   [](const OneDExtremalA& f) {
                       if (!(f.alpha > -1.0 && f.alpha < 0.0)) throw std::invalid_argument("OneDExtremalA needs alpha in (-1, 0)");
                   },
                   [](const OneDExtremalB& f) {
                       if (!(f.alpha <= -1.0) || !std::isfinite(f.alpha)) throw std::invalid_argument("OneDExtremalB needs alpha <= -1");
                   },
                   [](const SimplexIndicator& s) {
                       if (s.dim < 1 || s.dim > 3 || static_cast<int>(s.vertices.size()) != s.dim + 1)
                           throw std::invalid_argument("SimplexIndicator needs dim+1 vertices");
                       Matrix3 m{};
                       for (int r = 0; r < s.dim; ++r)
                           for (int c = 0; c < s.dim; ++c) m[r][c] = s.vertices[c + 1][r] - s.vertices[0][r];
                       if (std::abs(determinant(m, s.dim)) < 1e-12) throw std::invalid_argument("SimplexIndicator: degenerate simplex");
                   },
                   [](const PolytopeIndicator& p) {
                       if (p.body.degenerate()) throw std::invalid_argument("PolytopeIndicator: degenerate body");
                   },
                   [](const SupportExp& p) {
                       if (p.body.degenerate()) throw std::invalid_argument("SupportExp: degenerate body");
                   },
                   [](const std::shared_ptr<const AffineImage>& a) {
                       if (!a) throw std::invalid_argument("AffineImage: null");
                       if (std::abs(determinant(a->matrix, a->inner.dim())) <= 1e-12)
                           throw std::invalid_argument("AffineImage: singular matrix");
                       if (!(a->scale > 0.0)) throw std::invalid_argument("AffineImage: scale must be positive");
                   },
                   [](const Gaussian& g) {
                       if (!(g.width > 0.0)) throw std::invalid_argument("Gaussian: width must be positive");
                   },
                   [](const auto&) {},
               },
               v_);
    if (dim() < 1 || dim() > 3) throw std::invalid_argument("AnalyticFamily: dimension must be 1, 2 or 3");
}

int AnalyticFamily::dim() const {
    return std::visit(overloaded{
                          [](const OrthantExp& f) { return f.dim; },
                          [](const AbsExp& f) { return f.dim; },
                          [](const Gaussian& f) { return f.dim; },
                          [](const SimplexIndicator& f) { return f.dim; },
                          [](const PolytopeIndicator& f) { return f.body.dim(); },
                          [](const OneDExtremalA&) { return 1; },
                          [](const OneDExtremalB&) { return 1; },
                          [](const SupportExp& f) { return f.body.dim(); },
                          [](const std::shared_ptr<const AffineImage>& a) { return a->inner.dim(); },
                      },
                      v_);
}

double AnalyticFamily::operator()(const Point& x) const {
    const int n = dim();
    return std::visit(
        overloaded{
            [&](const OrthantExp&) {
                double s = 0.0;
                for (int a = 0; a < n; ++a) {
                    if (x[a] < 0.0) return 0.0;
                    s += x[a];
                }
                return std::exp(-s);
            },
            [&](const AbsExp&) {
                double s = 0.0;
                for (int a = 0; a < n; ++a) s += std::abs(x[a]);
                return std::exp(-s);
            },
            [&](const Gaussian& g) {
                double r2 = 0.0;
                for (int a = 0; a < n; ++a) r2 += (x[a] - g.center[a]) * (x[a] - g.center[a]);
                return std::exp(-r2 / (2.0 * g.width * g.width));
            },
            [&](const SimplexIndicator& s) { return in_simplex(s, x) ? 1.0 : 0.0; },
            [&](const PolytopeIndicator& p) { return p.body.contains(x) ? 1.0 : 0.0; },
            [&](const OneDExtremalA& f) { return x[0] < 0.0 ? 0.0 : std::pow(1.0 + x[0], 1.0 / f.alpha); },
            [&](const OneDExtremalB& f) {
                if (x[0] == 0.0) return kInf;
                if (x[0] < 0.0 || x[0] >= 1.0) return 0.0;
                return std::pow(x[0], 1.0 / f.alpha);
            },
            [&](const SupportExp& p) { return std::exp(-support_function(p.body, x)); },
            [&](const std::shared_ptr<const AffineImage>& a) {
                Point y{};
                for (int r = 0; r < n; ++r) {
                    y[r] = a->shift[r];
                    for (int c = 0; c < n; ++c) y[r] += a->matrix[r][c] * x[c];
                }
                return a->scale * a->inner(y);
            },
        },
        v_);
}

std::string AnalyticFamily::describe() const {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const OrthantExp& f) { os << "orthant-exp(n=" << f.dim << ")"; },
                   [&](const AbsExp& f) { os << "abs-exp(n=" << f.dim << ")"; },
                   [&](const Gaussian& f) { os << "gaussian(n=" << f.dim << ",width=" << f.width << ")"; },
                   [&](const SimplexIndicator& f) { os << "simplex-indicator(n=" << f.dim << ")"; },
                   [&](const PolytopeIndicator& f) {
                       os << "polytope-indicator(n=" << f.body.dim() << ",m=" << f.body.vertices().size() << ")";
                   },
                   [&](const OneDExtremalA& f) { os << "extremal-a(alpha=" << f.alpha << ")"; },
                   [&](const OneDExtremalB& f) { os << "extremal-b(alpha=" << f.alpha << ")"; },
                   [&](const SupportExp& f) { os << "support-exp(n=" << f.body.dim() << ")"; },
                   [&](const std::shared_ptr<const AffineImage>& a) {
                       os << "affine(" << a->inner.describe() << ",det=" << determinant(a->matrix, a->inner.dim())
                          << ",C=" << a->scale << ")";
                   },
               },
               v_);
    return os.str();
}

AnalyticFamily affine_image(AnalyticFamily inner, const Matrix3& a, const Point& shift, double scale) {
    return AnalyticFamily(std::make_shared<const AffineImage>(AffineImage{std::move(inner), a, shift, scale}));
}

GridFunction sample(const AnalyticFamily& family, const BoxDomain& domain) {
    if (family.dim() != domain.dim()) throw std::invalid_argument("sample: dimension mismatch");
    return GridFunction::from_function(domain, [&](const Point& x) { return family(x); });
}

} // namespace dfun
