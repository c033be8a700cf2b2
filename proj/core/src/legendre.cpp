#include "dfun/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> axis_coords(const Axis& ax) {
    std::vector<double> c(ax.count);
    for (std::size_t i = 0; i < ax.count; ++i) c[i] = ax.coordinate(i);
    return c;
}

struct Shape {
    std::array<std::size_t, 3> n{1, 1, 1};
    std::size_t size() const { return n[0] * n[1] * n[2]; }
    std::size_t stride(int a) const { return a == 0 ? n[1] * n[2] : a == 1 ? n[2] : 1; }
};

} // namespace

void conjugate_line(std::span<const double> x, std::span<const double> w, std::span<const double> p,
                    std::span<double> out) {
    thread_local std::vector<std::size_t> hull;
    hull.clear();
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (w[j] == -kInf) {
            std::fill(out.begin(), out.end(), kInf);
            return;
        }
        if (w[j] == kInf) continue;
        // lower hull: pop while the last turn is not strictly convex
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull.back();
            const double cr = (x[b] - x[a]) * (w[j] - w[a]) - (w[b] - w[a]) * (x[j] - x[a]);
            if (cr > 0) break;
            hull.pop_back();
        }
        hull.push_back(j);
    }
    if (hull.empty()) {
        std::fill(out.begin(), out.end(), -kInf);
        return;
    }
    std::size_t k = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
        while (k + 1 < hull.size()) {
            const std::size_t a = hull[k], b = hull[k + 1];
            // move right while the next vertex is at least as good
            if (p[q] * x[b] - w[b] >= p[q] * x[a] - w[a]) ++k;
            else break;
        }
        out[q] = p[q] * x[hull[k]] - w[hull[k]];
    }
}

std::vector<double> conjugate_tensor(const BoxDomain& primal, std::span<const double> v, const BoxDomain& dual) {
    if (primal.dim() != dual.dim()) throw std::invalid_argument("conjugate_tensor: dimension mismatch");
    if (v.size() != primal.size()) throw std::invalid_argument("conjugate_tensor: size mismatch");
    const int n = primal.dim();
    Shape shape;
    for (int a = 0; a < n; ++a) shape.n[a] = primal.count(a);
    // G_0 = -v; G_{a+1}(.., p_a, ..) = max_{x_a} p_a x_a + G_a = conj(-G_a)
    std::vector<double> g(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) g[k] = -v[k];

    std::vector<double> wline, oline;
    for (int a = 0; a < n; ++a) {
        const std::vector<double> xs = axis_coords(primal.axis(a));
        const std::vector<double> ps = axis_coords(dual.axis(a));
        Shape next = shape;
        next.n[a] = ps.size();
        std::vector<double> ng(next.size());
        wline.resize(xs.size());
        oline.resize(ps.size());
        const std::size_t s_in = shape.stride(a), s_out = next.stride(a);
        std::array<std::size_t, 3> other{};
        for (other[0] = 0; other[0] < (a == 0 ? 1 : shape.n[0]); ++other[0])
            for (other[1] = 0; other[1] < (a == 1 ? 1 : shape.n[1]); ++other[1])
                for (other[2] = 0; other[2] < (a == 2 ? 1 : shape.n[2]); ++other[2]) {
                    std::size_t base_in = 0, base_out = 0;
                    for (int b = 0; b < 3; ++b) {
                        base_in += other[b] * shape.stride(b);
                        base_out += other[b] * next.stride(b);
                    }
                    for (std::size_t j = 0; j < xs.size(); ++j) wline[j] = -g[base_in + j * s_in];
                    conjugate_line(xs, wline, ps, oline);
                    for (std::size_t q = 0; q < ps.size(); ++q) ng[base_out + q * s_out] = oline[q];
                }
        g = std::move(ng);
        shape = next;
    }
    return g;
}

ConjugateGrid legendre(std::span<const double> v, const BoxDomain& domain, const BoxDomain& dual) {
    if (std::none_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); }))
        throw std::invalid_argument("legendre: no finite node");
    return {dual, conjugate_tensor(domain, v, dual)};
}

bool is_grid_convex(const BoxDomain& domain, std::span<const double> v, double tol) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Index idx = domain.unflat(k);
        for (int a = 0; a < domain.dim(); ++a) {
            if (idx[a] == 0 || idx[a] + 1 >= domain.count(a)) continue;
            Index lo = idx, hi = idx;
            --lo[a];
            ++hi[a];
            const double l = v[domain.flat(lo)], h = v[domain.flat(hi)];
            if (l == kInf || h == kInf) continue;
            if (v[k] > 0.5 * (l + h) + tol) return false;
        }
    }
    return true;
}

namespace {

template <class Fn>
void for_each_slope(const BoxDomain& domain, std::span<const double> v, Fn&& fn) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Index idx = domain.unflat(k);
        for (int a = 0; a < domain.dim(); ++a) {
            if (idx[a] + 1 >= domain.count(a)) continue;
            Index nx = idx;
            ++nx[a];
            const double a0 = v[k], a1 = v[domain.flat(nx)];
            if (!std::isfinite(a0) || !std::isfinite(a1)) continue;
            fn(a, (a1 - a0) / domain.spacing(a));
        }
    }
}

} // namespace

BoxDomain slope_domain(const BoxDomain& domain, std::span<const double> v) {
    std::array<double, 3> lo{kInf, kInf, kInf}, hi{-kInf, -kInf, -kInf};
    for_each_slope(domain, v, [&](int a, double s) {
        lo[a] = std::min(lo[a], s);
        hi[a] = std::max(hi[a], s);
    });
    std::array<Axis, kMaxDim> ax{};
    for (int a = 0; a < domain.dim(); ++a) {
        if (lo[a] > hi[a]) lo[a] = hi[a] = 0.0;
        if (hi[a] - lo[a] < 1e-12) lo[a] -= 1.0, hi[a] += 1.0;
        ax[a] = Axis{lo[a], hi[a], 2 * domain.count(a) + 1};
    }
    return BoxDomain(domain.dim(), ax);
}

double grid_lipschitz(const BoxDomain& domain, std::span<const double> v) {
    double lip = 0.0;
    for_each_slope(domain, v, [&](int, double s) { lip = std::max(lip, std::abs(s)); });
    return lip;
}

double legendre_involution_gap(std::span<const double> v, const BoxDomain& domain) {
    const BoxDomain dual = slope_domain(domain, v);
    const ConjugateGrid conj = legendre(v, domain, dual);
    const std::vector<double> back = conjugate_tensor(dual, conj.values, domain);
    double gap = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!std::isfinite(v[k]) || domain.is_boundary(domain.unflat(k))) continue;
        gap = std::max(gap, std::abs(back[k] - v[k]));
    }
    return gap;
}

BoxDomain symmetric_dual(const BoxDomain& domain, std::span<const double> v, const DualGridSpec& spec) {
    if (spec.margin < 1) throw std::invalid_argument("symmetric_dual: margin must be >= 1");
    double lip = grid_lipschitz(domain, v);
    if (!(lip > 0.0)) lip = 1.0;
    std::size_t count = spec.count;
    if (count == 0) {
        std::size_t nmax = 0;
        for (int a = 0; a < domain.dim(); ++a) nmax = std::max(nmax, domain.count(a));
        count = (domain.dim() == 3 ? nmax : 2 * nmax) + 1;
    }
    const std::size_t step = 2 * static_cast<std::size_t>(spec.margin);
    const std::size_t cells = std::max<std::size_t>(step, ((count - 1 + step - 1) / step) * step);
    return BoxDomain::centered(domain.dim(), spec.margin * lip, cells + 1);
}

std::vector<double> half_inf_convolution_conjugate(const BoxDomain& domain, std::span<const double> u,
                                                   const BoxDomain& out, const DualGridSpec& spec) {
    const BoxDomain dual = symmetric_dual(domain, u, spec);
    const ConjugateGrid uc = legendre(u, domain, dual);
    // phi(p) = u*(p) + u*(-p); the dual grid is symmetric so -p is the mirrored index
    std::vector<double> phi(uc.values.size());
    for (std::size_t k = 0; k < phi.size(); ++k) {
        Index idx = dual.unflat(k);
        for (int a = 0; a < dual.dim(); ++a) idx[a] = dual.count(a) - 1 - idx[a];
        phi[k] = uc.values[k] + uc.values[dual.flat(idx)];
    }
    std::array<Axis, kMaxDim> ax{};
    for (int a = 0; a < out.dim(); ++a) ax[a] = Axis{2 * out.axis(a).lower, 2 * out.axis(a).upper, out.count(a)};
    const BoxDomain doubled(out.dim(), ax);
    std::vector<double> psi = conjugate_tensor(dual, phi, doubled);
    for (double& x : psi) x *= 0.5;
    return psi;
}

} // namespace dfun
