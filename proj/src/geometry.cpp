#include "homarea/geometry.hpp"

#include "homarea/errors.hpp"

#include <algorithm>
#include <cctype>

namespace homarea {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<mpz_class> parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    mpz_class v(std::string(s), 10);
    return negative ? mpz_class(-v) : v;
}

Point sub(const Point &a, const Point &b) { return {a.x - b.x, a.y - b.y}; }

Rational dot(const Point &a, const Point &b) { return a.x * b.x + a.y * b.y; }

// Parameter of p along segment ab, assuming p is on the supporting line.
Rational param_on(const Segment &s, const Point &p) {
    Point d = sub(s.b, s.a);
    Rational r = dot(sub(p, s.a), d) / dot(d, d);
    return r;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) return std::nullopt;
        mpz_class den(std::string(den_text), 10);
        if (!num || den == 0) return std::nullopt;
        Rational r(*num, den);
        r.canonicalize();
        return r;
    }
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        auto exp = parse_integer(text.substr(e + 1));
        if (!exp || !exp->fits_slong_p()) return std::nullopt;
        exponent = exp->get_si();
        if (exponent > 100000 || exponent < -100000) return std::nullopt;
        text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot_pos);
        std::string_view frac_part = text.substr(dot_pos + 1);
        if (int_part.empty() && frac_part.empty()) return std::nullopt;
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
            return std::nullopt;
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(text)) return std::nullopt;
        digits = std::string(text);
    }
    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational &value) { return value.get_d(); }

int sign(const Rational &value) { return sgn(value); }

Point make_point(long x, long y) { return {Rational(x), Rational(y)}; }

std::string to_string(const Point &p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Rational cross(const Point &o, const Point &a, const Point &b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational cross(const Point &a, const Point &b) { return a.x * b.y - a.y * b.x; }

int orient(const Point &a, const Point &b, const Point &c) { return sgn(cross(a, b, c)); }

bool in_ccw_sector(const Point &from, const Point &to, const Point &d) {
    int span = sgn(cross(from, to));
    int after_from = sgn(cross(from, d));
    int before_to = sgn(cross(d, to));
    if (span > 0) return after_from > 0 && before_to > 0;
    if (span < 0) return after_from > 0 || before_to > 0;
    // from and to are opposite (or equal, which callers never pass)
    return after_from > 0;
}

std::optional<SegmentHit> segment_intersection(const Segment &s1, const Segment &s2) {
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);

    if (o1 == 0 && o2 == 0) {
        Rational tc = param_on(s1, c), td = param_on(s1, d);
        Rational lo = std::max(Rational(0), std::min(tc, td));
        Rational hi = std::min(Rational(1), std::max(tc, td));
        if (lo > hi) return std::nullopt;
        if (lo < hi) return SegmentHit{std::nullopt, HitKind::degenerate, lo, 0};
        Point p = lo == 0 ? a : b;
        Rational u = param_on(s2, p);
        bool shared = (p == c || p == d);
        return SegmentHit{p, shared ? HitKind::endpoint_shared : HitKind::degenerate, lo, u};
    }

    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        if (o1 == o2 || o3 == o4) return std::nullopt;
        Point r = sub(b, a), s = sub(d, c), ca = sub(c, a);
        Rational denom = cross(r, s);
        Rational t = cross(ca, s) / denom;
        Rational u = cross(ca, r) / denom;
        Point p{a.x + t * r.x, a.y + t * r.y};
        return SegmentHit{p, HitKind::transversal_interior, t, u};
    }

    // Exactly one touching point is possible once the collinear case is out.
    auto within = [](const Rational &t) { return t >= 0 && t <= 1; };
    std::optional<Point> touch;
    if (o1 == 0 && within(param_on(s1, c))) touch = c;
    else if (o2 == 0 && within(param_on(s1, d))) touch = d;
    else if (o3 == 0 && within(param_on(s2, a))) touch = a;
    else if (o4 == 0 && within(param_on(s2, b))) touch = b;
    if (!touch) return std::nullopt;
    const Point &p = *touch;
    bool end1 = (p == a || p == b), end2 = (p == c || p == d);
    return SegmentHit{p, end1 && end2 ? HitKind::endpoint_shared : HitKind::degenerate, param_on(s1, p),
                      param_on(s2, p)};
}

Rational signed_area(std::span<const Point> v) {
    Rational twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
    return twice / 2;
}

Polyline::Polyline(std::vector<Point> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
    if (vertices_.size() < (closed_ ? 3u : 2u))
        throw InputError(closed_ ? "cycle needs at least 3 vertices" : "path needs at least 2 vertices");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i + 1])
            throw DegenerateInput("repeated consecutive vertex " + to_string(vertices_[i]));
    if (closed_ && vertices_.front() == vertices_.back())
        throw InputError("closed polyline must not repeat its first vertex");
}

std::size_t Polyline::segment_count() const {
    return closed_ ? vertices_.size() : vertices_.size() - 1;
}

Segment Polyline::segment(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
}

Point Polyline::point_at(const CurvePosition &pos) const {
    if (pos.t == 0) return vertices_[pos.segment % vertices_.size()];
    Segment s = segment(pos.segment);
    return {s.a.x + pos.t * (s.b.x - s.a.x), s.a.y + pos.t * (s.b.y - s.a.y)};
}

Polyline Polyline::reversed() const {
    std::vector<Point> v(vertices_.rbegin(), vertices_.rend());
    return Polyline(std::move(v), closed_);
}

std::vector<Point> Polyline::open_vertices() const {
    std::vector<Point> v = vertices_;
    if (closed_) v.push_back(vertices_.front());
    return v;
}

std::vector<Rational> cross_prefix(const Polyline &poly) {
    std::vector<Point> v = poly.open_vertices();
    std::vector<Rational> s(v.size());
    s[0] = 0;
    for (std::size_t i = 1; i < v.size(); ++i) s[i] = s[i - 1] + cross(v[i - 1], v[i]);
    return s;
}

Rational path_cross(const Polyline &poly, std::span<const Rational> prefix, const CurvePosition &a,
                    const CurvePosition &b) {
    Point pa = poly.point_at(a), pb = poly.point_at(b);
    if (a.segment == b.segment) return cross(pa, pb);
    const auto &v = poly.vertices();
    const Point &after_a = v[(a.segment + 1) % v.size()];
    const Point &before_b = v[b.segment % v.size()];
    return cross(pa, after_a) + (prefix[b.segment] - prefix[a.segment + 1]) + cross(before_b, pb);
}

Rational path_cross_directed(const Polyline &poly, std::span<const Rational> prefix,
                             const CurvePosition &a, const CurvePosition &b) {
    if (a <= b) return path_cross(poly, prefix, a, b);
    return -path_cross(poly, prefix, b, a);
}

} // namespace homarea
