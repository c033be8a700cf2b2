#pragma once

#include "dfun/box_domain.hpp"

#include <array>
#include <vector>

namespace dfun::detail {

struct Hull3 {
    bool degenerate = true;
    std::vector<Point> vertices;              // extreme points only, lexicographic
    std::vector<std::array<int, 3>> triangles; // outward, indices into vertices
};

Hull3 hull3d(const std::vector<Point>& points);

inline Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Point add(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace dfun::detail
