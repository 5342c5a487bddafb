#include "homarea/generators.hpp"

#include "homarea/arrangement.hpp"
#include "homarea/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace homarea {

namespace {

Point pt(const Rational &x, const Rational &y) { return {x, y}; }

std::uint64_t below(std::mt19937_64 &rng, std::uint64_t n) { return rng() % n; }

using GridNode = std::pair<long, long>;

// Loop-erased walk on a grid of (w+1) x (h+1) nodes from `from` to `to`.
std::vector<GridNode> loop_erased_walk(std::mt19937_64 &rng, GridNode from, GridNode to, long lo, long hi) {
    std::vector<GridNode> path{from};
    std::map<GridNode, std::size_t> index{{from, 0}};
    const long dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
    while (path.back() != to) {
        GridNode c = path.back();
        int k = static_cast<int>(below(rng, 4));
        GridNode n{c.first + dx[k], c.second + dy[k]};
        if (n.first < lo || n.first > hi || n.second < lo || n.second > hi) continue;
        auto it = index.find(n);
        if (it != index.end()) {
            for (std::size_t j = it->second + 1; j < path.size(); ++j) index.erase(path[j]);
            path.resize(it->second + 1);
            continue;
        }
        index[n] = path.size();
        path.push_back(n);
    }
    return path;
}

std::vector<Point> to_points(const std::vector<GridNode> &cells, const Rational &offset) {
    std::vector<Point> out;
    for (auto [x, y] : cells) out.push_back(pt(Rational(x) + offset, Rational(y) + offset));
    return out;
}

std::vector<Point> polyomino_boundary(const std::set<GridNode> &cells) {
    // directed unit edges with the polyomino on the left; fails on holes or pinches
    std::map<GridNode, GridNode> next;
    auto add = [&](GridNode a, GridNode b) {
        if (!next.emplace(a, b).second) throw InputError("pinched polyomino");
    };
    for (auto [x, y] : cells) {
        if (!cells.count({x, y - 1})) add({x, y}, {x + 1, y});
        if (!cells.count({x + 1, y})) add({x + 1, y}, {x + 1, y + 1});
        if (!cells.count({x, y + 1})) add({x + 1, y + 1}, {x, y + 1});
        if (!cells.count({x - 1, y})) add({x, y + 1}, {x, y});
    }
    GridNode start = next.begin()->first, c = start;
    std::vector<Point> out;
    do {
        out.push_back(make_point(c.first, c.second));
        c = next.at(c);
    } while (c != start);
    if (out.size() != next.size()) throw InputError("polyomino with a hole");
    return out;
}

std::set<GridNode> random_polyomino(std::mt19937_64 &rng, std::size_t n, long span) {
    std::set<GridNode> cells{{static_cast<long>(below(rng, span)), static_cast<long>(below(rng, span))}};
    const long dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
    while (cells.size() < n) {
        auto it = cells.begin();
        std::advance(it, static_cast<long>(below(rng, cells.size())));
        int k = static_cast<int>(below(rng, 4));
        GridNode c{it->first + dx[k], it->second + dy[k]};
        if (c.first < 0 || c.second < 0 || c.first >= span || c.second >= span) continue;
        cells.insert(c);
    }
    return cells;
}

} // namespace

Polyline merge_collinear(const Polyline &poly) {
    const auto &v = poly.vertices();
    const std::size_t n = v.size();
    std::vector<Point> out;
    for (std::size_t k = 0; k < n; ++k) {
        bool end = !poly.closed() && (k == 0 || k + 1 == n);
        if (!end) {
            const Point &a = v[(k + n - 1) % n], &b = v[(k + 1) % n];
            if (orient(a, v[k], b) == 0) continue;
        }
        out.push_back(v[k]);
    }
    return Polyline(std::move(out), poly.closed());
}

CurvePair gen_zigzag(std::size_t n) {
    const long m = static_cast<long>(n) + 1;
    std::vector<Point> q{make_point(0, 0)};
    for (long k = 1; k < m; ++k) q.push_back(make_point(k, k % 2 ? 1 : -1));
    q.push_back(make_point(m, 0));
    return {Polyline({make_point(0, 0), make_point(m, 0)}, false), Polyline(std::move(q), false)};
}

CurvePair gen_lens() {
    return {Polyline({make_point(0, 0), make_point(2, 1), make_point(4, 0)}, false),
            Polyline({make_point(0, 0), make_point(2, -1), make_point(4, 0)}, false)};
}

CurvePair gen_figure_eight() {
    return {Polyline({make_point(0, 0), make_point(4, 0)}, false),
            Polyline({make_point(0, 0), make_point(1, 2), make_point(3, -2), make_point(4, 0)}, false)};
}

CurvePair gen_random_monotone(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long L = static_cast<long>(std::max<std::size_t>(n, 1));
    for (;;) {
        std::vector<Point> p{make_point(0, 0)}, q{make_point(0, 0)};
        for (long k = 1; k < L; ++k) p.push_back(make_point(k, static_cast<long>(below(rng, 9)) - 4));
        for (long k = 0; k < L; ++k)
            q.push_back(pt(Rational(2 * k + 1, 2), Rational(static_cast<long>(below(rng, 9)) - 4)));
        p.push_back(make_point(L, 0));
        q.push_back(make_point(L, 0));
        try {
            Polyline pp(std::move(p), false), qq(std::move(q), false);
            validate_inputs(pp, qq);
            return {std::move(pp), std::move(qq)};
        } catch (const InputError &) {
        }
    }
}

CurvePair gen_random_walks(std::size_t size, std::uint64_t seed, std::size_t max_vertices,
                           std::size_t max_crossings) {
    std::mt19937_64 rng(seed);
    const long s = static_cast<long>(std::max<std::size_t>(size, 2));
    const Rational half(1, 2);
    for (;;) {
        GridNode b{static_cast<long>(below(rng, s)) + 1, static_cast<long>(below(rng, s)) + 1};
        auto pw = loop_erased_walk(rng, {0, 0}, b, -1, s + 1);
        // Q nodes are offset by (1/2, 1/2); it runs from next to A to next to B
        auto qw = loop_erased_walk(rng, {0, 0}, {b.first - 1, b.second - 1}, -2, s + 1);
        std::vector<Point> p = to_points(pw, 0);
        std::vector<Point> q{make_point(0, 0)};
        auto qpts = to_points(qw, half);
        q.insert(q.end(), qpts.begin(), qpts.end());
        q.push_back(make_point(b.first, b.second));
        try {
            Polyline pp = merge_collinear(Polyline(std::move(p), false));
            Polyline qq = merge_collinear(Polyline(std::move(q), false));
            if (pp.size() + qq.size() > max_vertices) continue;
            validate_inputs(pp, qq);
            if (compute_intersections(pp, qq).size() - 2 > max_crossings) continue;
            return {std::move(pp), std::move(qq)};
        } catch (const InputError &) {
        }
    }
}

namespace {

// Appends random points while the polyline stays simple, then closes at `to`.
std::optional<std::vector<Point>> random_simple(std::mt19937_64 &rng, const Point &from, const Point &to,
                                                std::size_t k, long size, const Point &offset) {
    std::vector<Point> v{from};
    auto fits = [&](const Point &next) {
        Segment s{v.back(), next};
        if (next == v.back()) return false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            auto hit = segment_intersection(Segment{v[i], v[i + 1]}, s);
            if (!hit) continue;
            if (i + 2 == v.size() && hit->kind == HitKind::endpoint_shared && *hit->point == v.back()) continue;
            return false;
        }
        return true;
    };
    for (std::size_t added = 0, tries = 0; added < k; ++tries) {
        if (tries > 200) return std::nullopt;
        Point c{Rational(static_cast<long>(below(rng, static_cast<std::uint64_t>(size) + 1))) + offset.x,
                Rational(static_cast<long>(below(rng, static_cast<std::uint64_t>(size) + 1))) + offset.y};
        if (c == to || !fits(c)) continue;
        v.push_back(c);
        ++added;
    }
    if (!fits(to)) return std::nullopt;
    v.push_back(to);
    return v;
}

} // namespace

CurvePair gen_random_polylines(std::size_t k, std::size_t size, std::uint64_t seed, std::size_t max_crossings) {
    std::mt19937_64 rng(seed);
    const long s = static_cast<long>(std::max<std::size_t>(size, 2));
    const Point a = make_point(0, 0), zero = make_point(0, 0);
    const Point offset{Rational(1, 3), Rational(1, 5)};
    for (;;) {
        Point b = make_point(s, static_cast<long>(below(rng, static_cast<std::uint64_t>(s) + 1)));
        auto p = random_simple(rng, a, b, k, s, zero);
        auto q = random_simple(rng, a, b, k, s - 1, offset);
        if (!p || !q) continue;
        try {
            Polyline pp(std::move(*p), false), qq(std::move(*q), false);
            validate_inputs(pp, qq);
            if (compute_intersections(pp, qq).size() - 2 > max_crossings) continue;
            return {std::move(pp), std::move(qq)};
        } catch (const InputError &) {
        }
    }
}

CurvePair gen_random_cycles(std::size_t cells, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long span = static_cast<long>(cells) / 2 + 2;
    const Rational half(1, 2);
    for (;;) {
        try {
            auto pb = polyomino_boundary(random_polyomino(rng, cells, span));
            auto qb = polyomino_boundary(random_polyomino(rng, cells, span));
            for (Point &v : qb) {
                v.x += half;
                v.y += half;
            }
            Polyline p = merge_collinear(Polyline(std::move(pb), true));
            Polyline q = merge_collinear(Polyline(std::move(qb), true));
            validate_simple(p, "P");
            validate_simple(q, "Q");
            cycle_crossings(p, q);
            return {std::move(p), std::move(q)};
        } catch (const InputError &) {
        }
    }
}

} // namespace homarea
