#ifndef HOMAREA_GENERATORS_HPP
#define HOMAREA_GENERATORS_HPP

#include "homarea/geometry.hpp"

#include <cstdint>

namespace homarea {

struct CurvePair {
    Polyline p;
    Polyline q;
};

/// P straight, Q zigzagging across it: n - 1 interior crossings.
CurvePair gen_zigzag(std::size_t n);
/// Two arcs bounding a rhombus of area 4.
CurvePair gen_lens();
/// Q crosses P once, forming two lobes of opposite orientation.
CurvePair gen_figure_eight();
/// x-monotone paths: P on integer x, Q on half-integer x, n segments each.
CurvePair gen_random_monotone(std::size_t n, std::uint64_t seed);
/// Loop-erased lattice walks: P on the integer grid, Q on the half-offset
/// grid, joined to the shared endpoints by short diagonals. `size` bounds the
/// grid; the result respects the vertex and crossing limits.
CurvePair gen_random_walks(std::size_t size, std::uint64_t seed, std::size_t max_vertices = 40,
                           std::size_t max_crossings = 20);
/// Self-avoiding polylines with `k` interior vertices each and long random
/// segments in a box of side `size`; P on integer points, Q offset by (1/3, 1/5).
CurvePair gen_random_polylines(std::size_t k, std::size_t size, std::uint64_t seed,
                               std::size_t max_crossings = 20);
/// Boundaries of random polyominoes, Q on the half-offset grid.
CurvePair gen_random_cycles(std::size_t cells, std::uint64_t seed);

/// Drops vertices that lie on the segment joining their neighbours.
Polyline merge_collinear(const Polyline &poly);

} // namespace homarea

#endif
