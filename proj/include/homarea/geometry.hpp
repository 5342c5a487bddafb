#ifndef HOMAREA_GEOMETRY_HPP
#define HOMAREA_GEOMETRY_HPP

// Exact rational plane geometry. Every value is an arbitrary-precision
// rational, so orientation and equality tests are decided exactly.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homarea {

using Rational = mpq_class;

/// Parses "12", "-3/4", "0.125", "1e-3", "2.5E2" exactly.
/// Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &value);

/// Display-only decimal rendering.
double to_double(const Rational &value);

int sign(const Rational &value);

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point &a, const Point &b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point &a, const Point &b) { return !(a == b); }
};

// Lexicographic (x, then y); used for dedup maps and sweep ordering.
struct PointLess {
    bool operator()(const Point &a, const Point &b) const {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return cmp(a.y, b.y) < 0;
    }
};

Point make_point(long x, long y);
std::string to_string(const Point &p);

/// Cross product of the vectors (a - o) and (b - o).
Rational cross(const Point &o, const Point &a, const Point &b);
/// Cross product of two points taken as vectors from the origin.
Rational cross(const Point &a, const Point &b);

/// Sign of (b - a) x (c - a); +1 is a counter-clockwise turn.
int orient(const Point &a, const Point &b, const Point &c);

/// Signed angle test: does direction d lie strictly inside the sector swept
/// counter-clockwise from direction from to direction to? Directions are
/// given as vectors (points relative to the origin).
bool in_ccw_sector(const Point &from, const Point &to, const Point &d);

struct Segment {
    Point a;
    Point b;
};

enum class HitKind {
    transversal_interior, // single crossing strictly inside both segments
    endpoint_shared,      // segments meet only at a common endpoint
    degenerate,           // overlap, or an endpoint touching the other's interior
};

struct SegmentHit {
    std::optional<Point> point; // empty for collinear overlaps
    HitKind kind;
    Rational t; // parameter of the point on the first segment
    Rational u; // parameter of the point on the second segment
};

std::optional<SegmentHit> segment_intersection(const Segment &s1, const Segment &s2);

/// Shoelace area, positive iff the closed sequence runs counter-clockwise.
Rational signed_area(std::span<const Point> closed_vertices);

/// Position along a polyline: segment index plus a parameter in [0, 1).
/// The terminal vertex is represented as {segment_count, 0}.
struct CurvePosition {
    std::size_t segment = 0;
    Rational t = 0;

    friend bool operator==(const CurvePosition &a, const CurvePosition &b) {
        return a.segment == b.segment && a.t == b.t;
    }
    friend std::strong_ordering operator<=>(const CurvePosition &a, const CurvePosition &b) {
        if (a.segment != b.segment) return a.segment <=> b.segment;
        int c = cmp(a.t, b.t);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

class Polyline {
public:
    Polyline() = default;
    /// Throws InputError when fewer than two vertices (three when closed),
    /// on repeated consecutive vertices, or when a closed polyline repeats its
    /// first vertex at the end.
    Polyline(std::vector<Point> vertices, bool closed);

    const std::vector<Point> &vertices() const { return vertices_; }
    bool closed() const { return closed_; }
    std::size_t size() const { return vertices_.size(); }
    const Point &operator[](std::size_t i) const { return vertices_[i]; }
    const Point &front() const { return vertices_.front(); }
    const Point &back() const { return vertices_.back(); }

    /// Number of segments, counting the implicit closing edge when closed.
    std::size_t segment_count() const;
    Segment segment(std::size_t i) const;
    Point point_at(const CurvePosition &pos) const;

    Polyline reversed() const;
    /// Vertex list with the closing vertex repeated (for closed polylines).
    std::vector<Point> open_vertices() const;

private:
    std::vector<Point> vertices_;
    bool closed_ = false;
};

/// S[k] = sum over i < k of x_i*y_{i+1} - x_{i+1}*y_i, over the open vertex list.
std::vector<Rational> cross_prefix(const Polyline &poly);

/// Shoelace contribution (twice the area term) of the sub-path from position a
/// to position b, a <= b, in O(1) given prefix = cross_prefix(poly).
Rational path_cross(const Polyline &poly, std::span<const Rational> prefix,
                    const CurvePosition &a, const CurvePosition &b);

/// Same, but b may precede a (the result is then negated).
Rational path_cross_directed(const Polyline &poly, std::span<const Rational> prefix,
                             const CurvePosition &a, const CurvePosition &b);

} // namespace homarea

#endif
