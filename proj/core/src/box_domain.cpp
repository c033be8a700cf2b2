#include "dfun/box_domain.hpp"

#include <sstream>
#include <stdexcept>

namespace dfun {

BoxDomain::BoxDomain(int dim, const std::array<Axis, kMaxDim>& axes) : dim_(dim), axes_(axes) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("BoxDomain: dimension must be 1, 2 or 3");
    for (int a = 0; a < dim; ++a) {
        if (!(axes[a].lower < axes[a].upper)) throw std::invalid_argument("BoxDomain: lower must be < upper");
        if (axes[a].count < 2) throw std::invalid_argument("BoxDomain: at least two nodes per axis");
    }
    for (int a = dim; a < kMaxDim; ++a) axes_[a] = Axis{0.0, 1.0, 1};
}

BoxDomain BoxDomain::cube(int dim, double lower, double upper, std::size_t count) {
    std::array<Axis, kMaxDim> ax{};
    for (int a = 0; a < kMaxDim; ++a) ax[a] = Axis{lower, upper, count};
    return BoxDomain(dim, ax);
}

BoxDomain BoxDomain::centered(int dim, double half_width, std::size_t count) {
    return cube(dim, -half_width, half_width, count);
}

double BoxDomain::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim_; ++a) v *= spacing(a);
    return v;
}

double BoxDomain::volume() const {
    double v = 1.0;
    for (int a = 0; a < dim_; ++a) v *= axes_[a].upper - axes_[a].lower;
    return v;
}

std::size_t BoxDomain::num_cells() const {
    std::size_t c = 1;
    for (int a = 0; a < dim_; ++a) c *= axes_[a].count - 1;
    return c;
}

Index BoxDomain::unflat(std::size_t k) const {
    Index idx{};
    idx[2] = k % count(2);
    k /= count(2);
    idx[1] = k % count(1);
    idx[0] = k / count(1);
    return idx;
}

Point BoxDomain::point(const Index& idx) const {
    Point p{};
    for (int a = 0; a < dim_; ++a) p[a] = axes_[a].coordinate(idx[a]);
    return p;
}

BoxDomain BoxDomain::reflected() const {
    std::array<Axis, kMaxDim> ax = axes_;
    for (int a = 0; a < dim_; ++a) ax[a] = Axis{-axes_[a].upper, -axes_[a].lower, axes_[a].count};
    return BoxDomain(dim_, ax);
}

bool BoxDomain::is_boundary(const Index& idx) const {
    for (int a = 0; a < dim_; ++a)
        if (idx[a] == 0 || idx[a] + 1 == axes_[a].count) return true;
    return false;
}

std::string BoxDomain::describe() const {
    std::ostringstream os;
    os.precision(17);
    for (int a = 0; a < dim_; ++a) {
        if (a) os << " x ";
        os << "[" << axes_[a].lower << "," << axes_[a].upper << "]#" << axes_[a].count;
    }
    return os.str();
}

} // namespace dfun
