#ifndef HOMAREA_TRIANGULATION_HPP
#define HOMAREA_TRIANGULATION_HPP

#include "homarea/geometry.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace homarea {

/// Exact constrained triangulation of an axis-aligned box.
///
/// The input points are inserted incrementally (Delaunay by Lawson flips),
/// then each constraint edge is forced in by flipping the edges it crosses.
/// The box is the bounding box of the points inflated by `margin`; its four
/// corners become the last four vertices. Constraints may only meet at shared
/// endpoints and must not pass through other input points.
class Triangulation {
public:
    struct Edge {
        int tri;   // triangle holding the directed edge
        int index; // index of the vertex opposite the edge within `tri`
    };

    Triangulation(std::vector<Point> points, const std::vector<std::pair<int, int>> &constraints,
                  const Rational &margin);

    std::size_t vertex_count() const { return points_.size(); }
    std::size_t triangle_count() const { return verts_.size(); }
    const Point &point(int v) const { return points_[v]; }
    const std::array<int, 3> &vertices(int t) const { return verts_[t]; }
    /// Neighbor across the edge opposite vertex k, or -1 on the box boundary.
    int neighbor(int t, int k) const { return nbrs_[t][k]; }
    bool constrained(int t, int k) const { return constrained_[t][k]; }

    /// Triangle lying to the left of the directed edge u->v; the edge must exist.
    Edge find_edge(int u, int v) const;
    int triangle_left_of(int u, int v) const { return find_edge(u, v).tri; }

    /// Triangle containing p in its closed interior, or -1 outside the box.
    int locate(const Point &p) const;
    Point centroid(int t) const;
    Rational area(int t) const;

    const Point &box_min() const { return box_min_; }
    const Point &box_max() const { return box_max_; }

    std::uint64_t flip_count() const { return flips_; }

private:
    void insert_point(int p);
    void split_triangle(int t, int p);
    void split_edge(int t, int k, int p);
    void legalize(int t, int p);
    void flip(int t, int k);
    void insert_constraint(int a, int b);
    void replace_neighbor(int t, int old_nb, int new_nb);
    void touch(int t);
    int opposite_index(int t, int other) const;
    void build_integer_coords();
    int orient_v(int a, int b, int c) const;
    int incircle_v(int a, int b, int c, int d) const;

    std::vector<Point> points_;
    // points_ shifted and scaled to integers; the int64 copy is used when it fits
    std::vector<std::array<mpz_class, 2>> big_;
    std::vector<std::array<std::int64_t, 2>> small_;
    bool use_small_ = false;
    std::vector<std::array<int, 3>> verts_;
    std::vector<std::array<int, 3>> nbrs_;
    std::vector<std::array<bool, 3>> constrained_;
    std::vector<int> vertex_tri_;
    Point box_min_, box_max_;
    int last_ = 0;
    std::uint64_t flips_ = 0;
};

} // namespace homarea

#endif
