#pragma once

#include "dfun/grid_function.hpp"
#include "dfun/polytope.hpp"

#include <iosfwd>
#include <string>

namespace dfun {

/// Text grid format:
///   # dfun-grid v1
///   dim <n>
///   axis <a> <lower> <upper> <count>      (one line per axis)
///   values
///   <value>                               (one per line, row-major, "inf" allowed)
/// Numbers are written with 17 significant digits so a round trip is exact.
void write_grid(std::ostream& os, const GridFunction& f);
GridFunction read_grid(std::istream& is);

/// One vertex per line, whitespace-separated coordinates; blank lines and
/// lines starting with '#' are ignored. The dimension is the coordinate count
/// of the first vertex.
void write_polytope(std::ostream& os, const Polytope& p);
Polytope read_polytope(std::istream& is);

Polytope load_polytope(const std::string& path);

} // namespace dfun
