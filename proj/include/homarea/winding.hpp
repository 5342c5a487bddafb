#ifndef HOMAREA_WINDING_HPP
#define HOMAREA_WINDING_HPP

#include "homarea/arrangement.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace homarea {

/// First direction of (1,0), (1,1), (1,2), ... whose line through x avoids every vertex.
Point generic_ray(const Point &x, std::span<const Point> vertices);

/// Signed crossing count of a ray from x with the closed polygon. A crossing
/// counts +1 when (x, a, b) turns counter-clockwise. Throws OnCurve.
int winding_number(const Point &x, std::span<const Point> closed_curve);
/// Same with a caller-chosen direction; throws InputError if the ray hits a vertex.
int winding_number(const Point &x, std::span<const Point> closed_curve, const Point &direction);

/// Winding of every cell of an arrangement with respect to a closed curve made
/// of its arcs. The unbounded cell is 0.
struct CellWinding {
    std::vector<int> values; // indexed by cell id
    /// Events (from, to) when the curve is C[from, to]; empty for P∘rev(Q).
    std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// `arc_weight[a]` is +1 when arc a is traversed forward, -1 backward, 0 if unused.
/// Throws InternalError when the weights do not form a cycle.
CellWinding cell_windings(const Arrangement &arr, const std::vector<int> &arc_weight);
/// The closed curve P∘rev(Q) of a plain arrangement.
CellWinding cell_windings(const Arrangement &arr);
/// C[j, i]: P from event j to event i, then the second curve back from i to j.
CellWinding cell_windings(const Arrangement &arr, std::size_t j, std::size_t i);

/// Σ winding·area over bounded cells.
Rational total_winding(const CellWinding &cells, const Arrangement &arr);

enum class Side { left, right };

/// Region bounded by the P-arc between events u and u+1 and the piece of the
/// second curve joining them.
struct RuRegion {
    std::size_t u = 0;
    Rational area;
    int alpha = 0;
    Rational key_lo, key_hi;
    Side side = Side::left; // side of the second curve the P-arc runs on
    std::size_t rank_lo = 0, rank_hi = 0; // order of the two events along the second curve
    /// Only for closed-up (based loop) curves: the interior is everything on
    /// `side` outside the key interval plus all of the other side.
    bool complement = false;
};

/// Rank of every event in the order of the arrangement's second curve.
std::vector<std::size_t> q_ranks(const Arrangement &arr);
/// Side of the second curve onto which P leaves event u.
Side departure_side(const Arrangement &arr, std::size_t u);
std::vector<RuRegion> ru_table(const Arrangement &arr);

} // namespace homarea

#endif
