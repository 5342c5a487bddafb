#ifndef HOMAREA_ARRANGEMENT_HPP
#define HOMAREA_ARRANGEMENT_HPP

#include "homarea/geometry.hpp"
#include "homarea/triangulation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace homarea {

enum class CurveTag { p, q };

/// One point of P ∩ Q (or P ∩ Q̂).
struct IntersectionEvent {
    Point point;
    CurvePosition pos_p;
    CurvePosition pos_q; // position on the polyline the arrangement was built with
    Rational key;        // Q-order key: negative before Q, in [0, L_Q] on Q, > L_Q after
    int crossing_sign = 0;
    bool genuine = true;
};

/// Locates Q proper inside the second polyline of an arrangement: Q starts at
/// vertex `origin` and spans `length` segments. For a plain Q, origin is 0.
struct QFrame {
    std::size_t origin = 0;
    std::size_t length = 0;
};

struct Arc {
    CurveTag curve;
    int from; // arrangement vertex ids
    int to;
    std::vector<int> chain; // triangulation vertex ids along the curve's direction
    int left_cell = -1;
    int right_cell = -1;
};

struct Cell {
    bool unbounded = false;
    Rational area; // zero for the unbounded cell
    std::vector<int> arcs;
    Point sample; // a point strictly inside the cell
};

struct ValidateOptions {
    /// Paths may start and end at the same point (a cycle cut at a crossing).
    bool allow_based_loops = false;
};

/// Throws NotSimple unless the polyline is simple. A based loop (open polyline
/// whose ends coincide) is accepted when allow_based_loop is set.
void validate_simple(const Polyline &poly, const char *name, bool allow_based_loop = false);

/// Confirms both paths are simple, share endpoints and meet only in transversal
/// crossings. Throws EndpointMismatch, NotSimple or DegenerateInput.
void validate_inputs(const Polyline &p, const Polyline &q, ValidateOptions options = {});

/// P ∩ Q sorted along P, with the shared endpoints first and last.
std::vector<IntersectionEvent> compute_intersections(const Polyline &p, const Polyline &q);

struct CycleCrossing {
    Point point;
    CurvePosition pos_p;
    CurvePosition pos_q;
};

/// Crossings of two closed curves sorted along P. Any contact other than a
/// transversal crossing throws DegenerateInput.
std::vector<CycleCrossing> cycle_crossings(const Polyline &p, const Polyline &q);

/// Cell complex of two curves with exact cell areas. Cells are unions of
/// triangles of a constrained triangulation whose constraints are the curves.
class Arrangement {
public:
    Arrangement(Polyline p, Polyline q, QFrame frame);

    const Polyline &p() const { return p_; }
    const Polyline &q() const { return q_; }
    const QFrame &frame() const { return frame_; }

    /// Sorted along P; a based loop contributes its shared point twice.
    const std::vector<IntersectionEvent> &events() const { return events_; }
    const std::vector<Arc> &arcs() const { return arcs_; }
    const std::vector<Cell> &cells() const { return cells_; }
    int unbounded_cell() const { return unbounded_; }
    std::size_t vertex_count() const { return vertex_count_; }
    /// V - E + F, counting the unbounded cell.
    long euler_characteristic() const;

    /// Throws OnBoundary when p lies on either curve.
    int locate(const Point &point) const;

    const Triangulation &triangulation() const { return *tri_; }
    int cell_of_triangle(int t) const { return tri_cell_[t]; }
    CurveTag constraint_curve(int u, int v) const;

    int event_vertex(std::size_t e) const { return event_vertex_[e]; }
    /// Triangulation vertices adjacent to event e along the q chain; -1 past an end.
    int q_prev_vertex(std::size_t e) const { return q_prev_[e]; }
    int q_next_vertex(std::size_t e) const { return q_next_[e]; }
    /// Arcs of P between consecutive events, in P order (events().size() - 1 of them).
    const std::vector<int> &p_arcs() const { return p_arcs_; }
    /// Arcs of the second curve in its own order, tip arcs included.
    const std::vector<int> &q_arcs() const { return q_arcs_; }

    Rational bounded_area() const;

private:
    Polyline p_, q_;
    QFrame frame_;
    std::vector<IntersectionEvent> events_;
    std::vector<Arc> arcs_;
    std::vector<Cell> cells_;
    int unbounded_ = -1;
    std::size_t vertex_count_ = 0;
    std::unique_ptr<Triangulation> tri_;
    std::vector<int> tri_cell_;
    std::vector<int> event_vertex_, q_prev_, q_next_;
    std::vector<int> p_arcs_, q_arcs_;
    std::vector<std::pair<std::uint64_t, CurveTag>> edge_tags_; // sorted by key
};

/// Q extended on both sides into the unbounded cell.
struct ExtendedQ {
    Polyline qhat;
    QFrame frame;
    std::vector<IntersectionEvent> extension_events;
    std::shared_ptr<const Arrangement> arrangement; // arr(P + Q̂)
};

/// Builds Q̂ by breadth-first search over the triangulated arr(P+Q), crossing
/// only P. When `seed` is given, ties between equally short routes are broken
/// randomly.
ExtendedQ extend_q(const Polyline &p, const Polyline &q, std::optional<std::uint64_t> seed = std::nullopt);

} // namespace homarea

#endif
