#include "dfun/integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Calls fn(corner_mean_or_inf, max_finite_corner, has_inf) for every cell in
// lexicographic order.
template <class Fn>
void for_each_cell(const GridFunction& f, Fn&& fn) {
    const BoxDomain& d = f.domain();
    const int n = d.dim();
    const std::size_t c0 = d.count(0) - 1, c1 = n > 1 ? d.count(1) - 1 : 1, c2 = n > 2 ? d.count(2) - 1 : 1;
    const int corners = 1 << n;
    const double inv = 1.0 / corners;
    for (std::size_t i0 = 0; i0 < c0; ++i0)
        for (std::size_t i1 = 0; i1 < c1; ++i1)
            for (std::size_t i2 = 0; i2 < c2; ++i2) {
                double sum = 0.0, max_finite = 0.0;
                int infinite = 0;
                for (int m = 0; m < corners; ++m) {
                    const Index idx{i0 + (m & 1), i1 + ((m >> 1) & 1), i2 + ((m >> 2) & 1)};
                    const double v = f.value(idx);
                    if (v == kInf) {
                        ++infinite;
                    } else {
                        sum += v;
                        max_finite = std::max(max_finite, v);
                    }
                }
                fn(infinite ? kInf : sum * inv, max_finite, infinite);
            }
}

} // namespace

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 64) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t h = xs.size() / 2;
    return pairwise_sum(xs.subspan(0, h)) + pairwise_sum(xs.subspan(h));
}

double tail_estimate(const GridFunction& f) {
    const BoxDomain& d = f.domain();
    const int n = d.dim();
    double tail = 0.0;
    for (int a = 0; a < n; ++a) {
        double area = 1.0;
        for (int b = 0; b < n; ++b)
            if (b != a) area *= d.axis(b).upper - d.axis(b).lower;
        const std::size_t last = d.count(a) - 1;
        for (int side = 0; side < 2; ++side) {
            const std::size_t edge = side ? last : 0, inner = side ? last - 1 : 1;
            double fb = 0.0, fi = 0.0;
            std::size_t cnt = 0;
            for (std::size_t k = 0; k < f.size(); ++k) {
                Index idx = d.unflat(k);
                if (idx[a] != edge) continue;
                const double vb = f.value(k);
                idx[a] = inner;
                const double vi = f.value(idx);
                if (vb == kInf || vi == kInf) continue;
                fb += vb;
                fi += vi;
                ++cnt;
            }
            if (cnt == 0 || fb == 0.0) continue;
            fb /= cnt;
            fi /= cnt;
            const double h = d.spacing(a);
            const double decay = fi > fb ? h / std::log(fi / fb) : h;
            tail += fb * area * decay;
        }
    }
    return tail;
}

Integral integrate(const GridFunction& f) {
    std::vector<double> parts;
    parts.reserve(f.domain().num_cells());
    const double vol = f.domain().cell_volume();
    for_each_cell(f, [&](double mean, double max_finite, int infinite) {
        if (infinite > 1) throw std::domain_error("integrate: +inf nodes are not isolated");
        parts.push_back(vol * (infinite ? max_finite : mean));
    });
    return {pairwise_sum(parts), tail_estimate(f)};
}

namespace {
double cell_volume_above(const GridFunction& f, double s, bool closed) {
    std::size_t count = 0;
    for_each_cell(f, [&](double mean, double, int) {
        if (mean > s || (closed && mean == s)) ++count;
    });
    return static_cast<double>(count) * f.domain().cell_volume();
}
} // namespace

double superlevel_volume(const GridFunction& f, double s) { return cell_volume_above(f, s, false); }

double layer_cake(const GridFunction& f, std::span<const double> levels) {
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (!(levels[k] > 0.0)) throw std::invalid_argument("layer_cake: levels must be positive");
        if (k && !(levels[k] < levels[k - 1])) throw std::invalid_argument("layer_cake: levels must decrease");
    }
    std::vector<double> s(levels.begin(), levels.end());
    s.push_back(0.0);
    std::vector<double> vols(s.size());
    // {f >= s} and {f > s} differ for at most countably many s; the closed
    // sets keep a flat top from losing half of the first slab
    for (std::size_t k = 0; k < s.size(); ++k) vols[k] = cell_volume_above(f, s[k], s[k] > 0.0);
    std::vector<double> parts;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) parts.push_back((s[k] - s[k + 1]) * 0.5 * (vols[k] + vols[k + 1]));
    return pairwise_sum(parts);
}

std::vector<double> geometric_levels(double top, std::size_t count, double floor_ratio) {
    if (!(top > 0.0) || count < 2) throw std::invalid_argument("geometric_levels: need top > 0 and count >= 2");
    std::vector<double> out(count);
    const double r = std::pow(floor_ratio, 1.0 / static_cast<double>(count - 1));
    for (std::size_t k = 0; k < count; ++k) out[k] = top * std::pow(r, static_cast<double>(k));
    return out;
}

} // namespace dfun
