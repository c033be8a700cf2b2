#include "dfun/transforms.hpp"

#include "dfun/integration.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Span3 {
    std::array<std::vector<long>, 3> off;
    std::array<long, 3> n{1, 1, 1};
};

Span3 pairing(const BoxDomain& in, const BoxDomain& out) {
    Span3 s;
    for (int a = 0; a < 3; ++a) {
        if (a < in.dim()) {
            s.off[a] = pairing_offsets(in.axis(a), out.axis(a));
            s.n[a] = static_cast<long>(in.count(a));
        } else {
            s.off[a] = {0};
        }
    }
    return s;
}

// Visits every output node with the admissible input ranges; kernel(k_out,
// lo, hi, off) reduces over i in [lo, hi) per axis with partner i + off.
template <class Kernel>
void for_each_output(const BoxDomain& in, const BoxDomain& out, Kernel&& kernel) {
    if (in.dim() != out.dim()) throw std::invalid_argument("difference: dimension mismatch");
    const Span3 s = pairing(in, out);
    detail::parallel_for(out.size(), 64, [&](std::size_t b, std::size_t e) {
        for (std::size_t k = b; k < e; ++k) {
            const Index j = out.unflat(k);
            std::array<long, 3> lo{}, hi{}, o{};
            bool empty = false;
            for (int a = 0; a < 3; ++a) {
                o[a] = s.off[a][j[a]];
                lo[a] = std::max(0L, -o[a]);
                hi[a] = std::min(s.n[a], s.n[a] - o[a]);
                if (lo[a] >= hi[a]) empty = true;
            }
            kernel(k, empty, lo, hi, o);
        }
    });
}

// min over pairs of (w_i + w_partner), skipping +inf entries.
std::vector<double> min_plus(const BoxDomain& in, std::span<const double> w, const BoxDomain& out) {
    std::vector<double> res(out.size(), kInf);
    const long s0 = static_cast<long>(in.count(1) * in.count(2)), s1 = static_cast<long>(in.count(2));
    for_each_output(in, out, [&](std::size_t k, bool empty, auto lo, auto hi, auto o) {
        if (empty) return;
        const long shift = o[0] * s0 + o[1] * s1 + o[2];
        double best = kInf;
        for (long i0 = lo[0]; i0 < hi[0]; ++i0)
            for (long i1 = lo[1]; i1 < hi[1]; ++i1) {
                const long base = i0 * s0 + i1 * s1;
                for (long i2 = lo[2]; i2 < hi[2]; ++i2) {
                    const double a = w[base + i2], c = w[base + i2 + shift];
                    if (a == kInf || c == kInf) continue;
                    best = std::min(best, a + c);
                }
            }
        res[k] = best;
    });
    return res;
}

std::vector<double> max_min(const BoxDomain& in, std::span<const double> f, const BoxDomain& out) {
    std::vector<double> res(out.size(), 0.0);
    const long s0 = static_cast<long>(in.count(1) * in.count(2)), s1 = static_cast<long>(in.count(2));
    for_each_output(in, out, [&](std::size_t k, bool empty, auto lo, auto hi, auto o) {
        if (empty) return;
        const long shift = o[0] * s0 + o[1] * s1 + o[2];
        double best = 0.0;
        for (long i0 = lo[0]; i0 < hi[0]; ++i0)
            for (long i1 = lo[1]; i1 < hi[1]; ++i1) {
                const long base = i0 * s0 + i1 * s1;
                for (long i2 = lo[2]; i2 < hi[2]; ++i2) best = std::max(best, std::min(f[base + i2], f[base + i2 + shift]));
            }
        res[k] = best;
    });
    return res;
}

std::vector<double> alpha_powers(const GridFunction& f, double alpha) {
    std::vector<double> u(f.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = alpha_power(f.value(k), alpha);
    return u;
}

} // namespace

const char* route_name(Route r) {
    switch (r) {
    case Route::Direct: return "direct";
    case Route::Conjugate: return "conjugate";
    case Route::LevelSet: return "levelset";
    }
    return "?";
}

BoxDomain difference_domain(const BoxDomain& in) {
    std::array<Axis, kMaxDim> ax{};
    for (int a = 0; a < in.dim(); ++a) {
        const double hw = 0.5 * (in.axis(a).upper - in.axis(a).lower);
        ax[a] = Axis{-hw, hw, in.count(a)};
    }
    return BoxDomain(in.dim(), ax);
}

BoxDomain fine_difference_domain(const BoxDomain& in) {
    std::array<Axis, kMaxDim> ax{};
    for (int a = 0; a < in.dim(); ++a) {
        const double hw = 0.5 * (in.axis(a).upper - in.axis(a).lower);
        ax[a] = Axis{-hw, hw, 2 * in.count(a) - 1};
    }
    return BoxDomain(in.dim(), ax);
}

std::vector<long> pairing_offsets(const Axis& in, const Axis& out) {
    const double h = in.spacing();
    std::vector<long> off(out.count);
    for (std::size_t j = 0; j < out.count; ++j) off[j] = std::lround(-2.0 * out.coordinate(j) / h);
    return off;
}

std::vector<double> inf_convolution_brute(std::span<const double> v0, const BoxDomain& d0,
                                          std::span<const double> v1, const BoxDomain& d1, const BoxDomain& out) {
    if (d0.dim() != d1.dim() || d0.dim() != out.dim())
        throw std::invalid_argument("inf_convolution_brute: dimension mismatch");
    if (v0.size() != d0.size() || v1.size() != d1.size())
        throw std::invalid_argument("inf_convolution_brute: size mismatch");
    const int n = d0.dim();
    // target[a][i * N1 + k] = output index on axis a for the pair (i, k), or -1
    std::array<std::vector<long>, 3> target;
    for (int a = 0; a < 3; ++a) {
        if (a >= n) {
            target[a] = {0};
            continue;
        }
        const Axis &x0 = d0.axis(a), &x1 = d1.axis(a), &z = out.axis(a);
        const double tol = 0.5 * std::min(x0.spacing(), x1.spacing()) * (1.0 + 1e-9);
        const double hz = z.spacing();
        target[a].assign(x0.count * x1.count, -1);
        for (std::size_t i = 0; i < x0.count; ++i)
            for (std::size_t k = 0; k < x1.count; ++k) {
                const double s = x0.coordinate(i) + x1.coordinate(k);
                const long j = std::lround((0.5 * s - z.lower) / hz);
                if (j < 0 || j >= static_cast<long>(z.count)) continue;
                if (std::abs(s - 2.0 * z.coordinate(static_cast<std::size_t>(j))) <= tol) target[a][i * x1.count + k] = j;
            }
    }
    std::vector<double> w(out.size(), kInf);
    for (std::size_t p = 0; p < v0.size(); ++p) {
        if (v0[p] == kInf) continue;
        const Index i = d0.unflat(p);
        for (std::size_t q = 0; q < v1.size(); ++q) {
            if (v1[q] == kInf) continue;
            const Index k = d1.unflat(q);
            Index j{};
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) {
                const long t = target[a][i[a] * d1.count(a) + k[a]];
                if (t < 0) ok = false;
                else j[a] = static_cast<std::size_t>(t);
            }
            if (!ok) continue;
            double& slot = w[out.flat(j)];
            slot = std::min(slot, 0.5 * (v0[p] + v1[q]));
        }
    }
    return w;
}

std::vector<double> delta_v(std::span<const double> v, const BoxDomain& domain) {
    const BoxDomain refl = domain.reflected();
    std::vector<double> vr(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        Index idx = domain.unflat(k);
        for (int a = 0; a < domain.dim(); ++a) idx[a] = domain.count(a) - 1 - idx[a];
        vr[k] = v[domain.flat(idx)];
    }
    return inf_convolution_brute(v, domain, vr, refl, difference_domain(domain));
}

std::vector<double> difference_levels(const GridFunction& f, std::size_t count, double floor_ratio) {
    std::vector<double> levels;
    if (f.infinite_count() > 0) levels.push_back(kInf);
    if (f.max_finite() > 0.0) {
        for (double s : geometric_levels(f.max_finite(), count, floor_ratio)) levels.push_back(s);
    }
    return levels;
}

GridFunction difference_function(const GridFunction& f, AlphaParam alpha, Route route, const DifferenceOptions& opts) {
    const BoxDomain out = opts.output ? *opts.output : difference_domain(f.domain());
    if (out.dim() != f.dim()) throw std::invalid_argument("difference_function: output dimension mismatch");
    std::vector<double> res;
    switch (route) {
    case Route::Direct:
        if (alpha.is_minus_infinity()) {
            res = max_min(f.domain(), f.values(), out);
        } else if (alpha.is_zero()) {
            res = min_plus(f.domain(), f.log_values(), out);
            for (double& x : res) x = std::exp(-0.5 * x);
        } else {
            res = min_plus(f.domain(), alpha_powers(f, alpha.value()), out);
            for (double& x : res) x = alpha_root(0.5 * x, alpha.value());
        }
        break;
    case Route::Conjugate:
        if (alpha.is_minus_infinity())
            throw std::invalid_argument("difference_function: the conjugate route needs alpha > -inf");
        if (alpha.is_zero()) {
            if (f.infinite_count() > 0)
                throw std::invalid_argument("difference_function: the conjugate route needs finite values at alpha = 0");
            res = half_inf_convolution_conjugate(f.domain(), f.log_values(), out, opts.dual);
            for (double& x : res) x = std::exp(-x);
        } else {
            res = half_inf_convolution_conjugate(f.domain(), alpha_powers(f, alpha.value()), out, opts.dual);
            for (double& x : res) x = alpha_root(std::max(x, 0.0), alpha.value());
        }
        break;
    case Route::LevelSet: {
        if (!alpha.is_minus_infinity())
            throw std::invalid_argument("difference_function: the level-set route needs alpha = -inf");
        const std::vector<double> levels = difference_levels(f, opts.levels, opts.level_floor);
        res = level_set_difference(f, out, levels);
        break;
    }
    }
    return GridFunction(out, std::move(res));
}

ConcavityResult check_alpha_concavity_of_delta(const GridFunction& f, AlphaParam alpha, double tol) {
    return is_alpha_concave(difference_function(f, alpha, Route::Direct), alpha, tol);
}

} // namespace dfun
