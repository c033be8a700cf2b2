#include "dfun/io.hpp"

#include <cmath>
#include <limits>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dfun {

namespace {

void put(std::ostream& os, double x) {
    if (std::isinf(x)) os << "inf";
    else os << std::setprecision(17) << x;
}

double parse_number(const std::string& tok) {
    if (tok == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "'");
    return v;
}

std::string next_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error(std::string("read_grid: missing ") + what);
    return line;
}

} // namespace

void write_grid(std::ostream& os, const GridFunction& f) {
    os << "# dfun-grid v1\n";
    os << "dim " << f.dim() << '\n';
    for (int a = 0; a < f.dim(); ++a) {
        const Axis& ax = f.domain().axis(a);
        os << "axis " << a << ' ';
        put(os, ax.lower);
        os << ' ';
        put(os, ax.upper);
        os << ' ' << ax.count << '\n';
    }
    os << "values\n";
    for (double v : f.values()) {
        put(os, v);
        os << '\n';
    }
}

GridFunction read_grid(std::istream& is) {
    if (next_line(is, "header") != "# dfun-grid v1") throw std::runtime_error("read_grid: unknown header");
    std::istringstream dl(next_line(is, "dim"));
    std::string key;
    int dim = 0;
    if (!(dl >> key >> dim) || key != "dim") throw std::runtime_error("read_grid: bad dim line");
    if (dim < 1 || dim > kMaxDim) throw std::runtime_error("read_grid: dimension out of range");
    std::array<Axis, kMaxDim> axes{};
    for (int a = 0; a < dim; ++a) {
        std::istringstream al(next_line(is, "axis"));
        int idx = -1;
        std::string lo, hi;
        std::size_t count = 0;
        if (!(al >> key >> idx >> lo >> hi >> count) || key != "axis" || idx != a)
            throw std::runtime_error("read_grid: bad axis line");
        axes[a] = Axis{parse_number(lo), parse_number(hi), count};
    }
    const BoxDomain domain(dim, axes);
    if (next_line(is, "values") != "values") throw std::runtime_error("read_grid: expected 'values'");
    std::vector<double> values;
    values.reserve(domain.size());
    std::string tok;
    while (values.size() < domain.size() && is >> tok) values.push_back(parse_number(tok));
    if (values.size() != domain.size()) throw std::runtime_error("read_grid: truncated values");
    return GridFunction(domain, std::move(values));
}

void write_polytope(std::ostream& os, const Polytope& p) {
    for (const Point& v : p.vertices()) {
        for (int d = 0; d < p.dim(); ++d) {
            if (d) os << ' ';
            put(os, v[d]);
        }
        os << '\n';
    }
}

Polytope read_polytope(std::istream& is) {
    std::vector<Point> pts;
    int dim = 0;
    std::string line;
    while (std::getline(is, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        Point p{};
        int d = 0;
        while (ls >> tok) {
            if (d >= kMaxDim) throw std::runtime_error("read_polytope: more than 3 coordinates");
            p[d++] = parse_number(tok);
        }
        if (dim == 0) dim = d;
        else if (d != dim) throw std::runtime_error("read_polytope: inconsistent coordinate count");
        pts.push_back(p);
    }
    if (pts.empty()) throw std::runtime_error("read_polytope: no vertices");
    return convex_hull(dim, pts);
}

Polytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_polytope(in);
}

} // namespace dfun
