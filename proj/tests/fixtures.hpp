#pragma once

#include "homarea/geometry.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace fixtures {

using homarea::Point;
using homarea::Polyline;
using homarea::Rational;

inline Polyline path(std::initializer_list<std::pair<long, long>> pts) {
    std::vector<Point> v;
    for (auto [x, y] : pts) v.push_back(homarea::make_point(x, y));
    return Polyline(std::move(v), false);
}

inline Polyline cycle(std::initializer_list<std::pair<long, long>> pts) {
    std::vector<Point> v;
    for (auto [x, y] : pts) v.push_back(homarea::make_point(x, y));
    return Polyline(std::move(v), true);
}

// single triangle lobe
inline Polyline fix_a_p() { return path({{0, 0}, {4, 0}}); }
inline Polyline fix_a_q() { return path({{0, 0}, {2, 2}, {4, 0}}); }
// two lobes of opposite orientation
inline Polyline fix_b_p() { return path({{0, 0}, {4, 0}}); }
inline Polyline fix_b_q() { return path({{0, 0}, {1, 2}, {3, -2}, {4, 0}}); }
// Q wraps around its own end point
inline Polyline fix_c_p() { return path({{0, 0}, {4, 0}}); }
inline Polyline fix_c_q() { return path({{0, 0}, {3, 3}, {6, 0}, {3, -3}, {4, 0}}); }

} // namespace fixtures
