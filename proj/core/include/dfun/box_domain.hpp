#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace dfun {

inline constexpr int kMaxDim = 3;

using Point = std::array<double, kMaxDim>;
using Index = std::array<std::size_t, kMaxDim>;

struct Axis {
    double lower = 0.0;
    double upper = 1.0;
    std::size_t count = 2;

    double spacing() const { return (upper - lower) / static_cast<double>(count - 1); }
    // exact at both ends and at the centre of a symmetric axis
    double coordinate(std::size_t i) const {
        const double m = static_cast<double>(count - 1);
        return (lower * (m - static_cast<double>(i)) + upper * static_cast<double>(i)) / m;
    }
    friend bool operator==(const Axis&, const Axis&) = default;
};

/// Axis-aligned box in R^n (n <= 3) carrying a uniform tensor grid.
///
/// Axes beyond the dimension are stored as single-node placeholders so that
/// kernels can always iterate over three nested loops. Flat indices are
/// row-major with axis 0 slowest, i.e. lexicographic in the multi-index.
class BoxDomain {
public:
    BoxDomain() = default;
    /// Throws std::invalid_argument unless 1 <= axes.size() <= 3, lower < upper
    /// and count >= 2 on every axis.
    BoxDomain(int dim, const std::array<Axis, kMaxDim>& axes);

    static BoxDomain cube(int dim, double lower, double upper, std::size_t count);
    static BoxDomain centered(int dim, double half_width, std::size_t count);

    int dim() const { return dim_; }
    const Axis& axis(int a) const { return axes_[a]; }
    std::size_t count(int a) const { return a < dim_ ? axes_[a].count : 1; }
    double spacing(int a) const { return axes_[a].spacing(); }
    std::size_t size() const { return count(0) * count(1) * count(2); }

    double cell_volume() const;
    double volume() const;
    std::size_t num_cells() const;

    std::size_t flat(const Index& idx) const { return (idx[0] * count(1) + idx[1]) * count(2) + idx[2]; }
    Index unflat(std::size_t k) const;
    Point point(const Index& idx) const;
    Point point(std::size_t k) const { return point(unflat(k)); }

    /// Box reflected through the origin, same node counts.
    BoxDomain reflected() const;

    bool is_boundary(const Index& idx) const;

    std::string describe() const;

    friend bool operator==(const BoxDomain&, const BoxDomain&) = default;

private:
    int dim_ = 1;
    std::array<Axis, kMaxDim> axes_{};
};

} // namespace dfun
