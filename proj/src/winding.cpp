#include "homarea/winding.hpp"

#include "homarea/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace homarea {

namespace {

bool on_segment(const Point &x, const Point &a, const Point &b) {
    return orient(a, b, x) == 0 && std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= x.y && x.y <= std::max(a.y, b.y);
}

Point minus(const Point &a, const Point &b) { return {a.x - b.x, a.y - b.y}; }

} // namespace

Point generic_ray(const Point &x, std::span<const Point> vertices) {
    for (long k = 0;; ++k) {
        Point d = make_point(1, k);
        Point far{x.x + d.x, x.y + d.y};
        bool ok = std::none_of(vertices.begin(), vertices.end(),
                               [&](const Point &v) { return orient(x, far, v) == 0; });
        if (ok) return d;
    }
}

int winding_number(const Point &x, std::span<const Point> curve, const Point &d) {
    const std::size_t n = curve.size();
    Point far{x.x + d.x, x.y + d.y};
    int w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point &a = curve[i], &b = curve[(i + 1) % n];
        if (on_segment(x, a, b)) throw OnCurve();
        int oa = orient(x, far, a), ob = orient(x, far, b);
        if (oa == 0 || ob == 0) {
            // a vertex on the line: only a problem when it lies on the ray itself
            const Point &v = oa == 0 ? a : b;
            Point xv = minus(v, x);
            if (xv.x * d.x + xv.y * d.y > 0) throw InputError("ray passes through a curve vertex");
            continue;
        }
        if (oa == ob) continue;
        // the line crosses segment ab; keep it when the hit is ahead of x
        Point ab = minus(b, a);
        Rational lambda = cross(minus(a, x), ab) / cross(d, ab);
        if (lambda <= 0) continue;
        w += orient(x, a, b) > 0 ? 1 : -1;
    }
    return w;
}

int winding_number(const Point &x, std::span<const Point> curve) {
    for (std::size_t i = 0; i < curve.size(); ++i)
        if (on_segment(x, curve[i], curve[(i + 1) % curve.size()])) throw OnCurve();
    return winding_number(x, curve, generic_ray(x, curve));
}

CellWinding cell_windings(const Arrangement &arr, const std::vector<int> &arc_weight) {
    const auto &cells = arr.cells();
    const auto &arcs = arr.arcs();
    constexpr int unset = INT32_MIN;
    CellWinding out;
    out.values.assign(cells.size(), unset);
    out.values[arr.unbounded_cell()] = 0;
    std::deque<int> queue{arr.unbounded_cell()};
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int a : cells[c].arcs) {
            const Arc &arc = arcs[a];
            int w = arc_weight[a];
            // crossing from the right cell to the left cell adds the arc weight
            auto relax = [&](int from, int to, int delta) {
                if (from != c) return;
                int want = out.values[c] + delta;
                if (out.values[to] == unset) {
                    out.values[to] = want;
                    queue.push_back(to);
                } else if (out.values[to] != want) {
                    throw InternalError("inconsistent winding propagation");
                }
            };
            relax(arc.right_cell, arc.left_cell, w);
            relax(arc.left_cell, arc.right_cell, -w);
        }
    }
    for (int v : out.values)
        if (v == unset) throw InternalError("cell unreachable during winding propagation");
    return out;
}

CellWinding cell_windings(const Arrangement &arr) {
    std::vector<int> weight(arr.arcs().size(), 0);
    for (int a : arr.p_arcs()) weight[a] = 1;
    for (int a : arr.q_arcs()) weight[a] = -1;
    return cell_windings(arr, weight);
}

CellWinding cell_windings(const Arrangement &arr, std::size_t j, std::size_t i) {
    std::vector<int> weight(arr.arcs().size(), 0);
    const std::size_t lo = std::min(i, j), hi = std::max(i, j);
    int dir = j <= i ? 1 : -1;
    for (std::size_t k = lo; k < hi; ++k) weight[arr.p_arcs()[k]] += dir;

    const std::size_t ne = arr.events().size();
    auto rank = q_ranks(arr);
    const std::size_t offset = (arr.q_arcs().size() - (ne - 1)) / 2;
    const std::size_t rlo = std::min(rank[i], rank[j]), rhi = std::max(rank[i], rank[j]);
    // back along the second curve from i to j
    int qdir = rank[i] > rank[j] ? -1 : 1;
    for (std::size_t k = rlo; k < rhi; ++k) weight[arr.q_arcs()[offset + k]] += qdir;

    CellWinding out = cell_windings(arr, weight);
    out.pair = std::make_pair(j, i);
    return out;
}

Rational total_winding(const CellWinding &cells, const Arrangement &arr) {
    Rational total = 0;
    for (std::size_t c = 0; c < cells.values.size(); ++c)
        if (!arr.cells()[c].unbounded) total += cells.values[c] * arr.cells()[c].area;
    return total;
}

std::vector<std::size_t> q_ranks(const Arrangement &arr) {
    const auto &ev = arr.events();
    std::vector<std::size_t> order(ev.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ev[a].pos_q < ev[b].pos_q; });
    std::vector<std::size_t> rank(ev.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
    return rank;
}

Side departure_side(const Arrangement &arr, std::size_t u) {
    const auto &ev = arr.events()[u];
    const Triangulation &tri = arr.triangulation();
    const Point &x = ev.point;
    Segment ps = arr.p().segment(ev.pos_p.segment);
    Point p_dir = minus(ps.b, ps.a);
    int prev = arr.q_prev_vertex(u), next = arr.q_next_vertex(u);
    if (next < 0 && prev < 0) throw InternalError("isolated event");
    // at an end of an unextended curve, the side is taken against its end segment
    if (prev < 0) return sign(cross(minus(tri.point(next), x), p_dir)) > 0 ? Side::left : Side::right;
    if (next < 0) return sign(cross(minus(x, tri.point(prev)), p_dir)) > 0 ? Side::left : Side::right;
    Point out_dir = minus(tri.point(next), x);
    Point back_dir = minus(tri.point(prev), x);
    if (ev.pos_q.t != 0) return sign(cross(out_dir, p_dir)) > 0 ? Side::left : Side::right;
    return in_ccw_sector(out_dir, back_dir, p_dir) ? Side::left : Side::right;
}

std::vector<RuRegion> ru_table(const Arrangement &arr) {
    const auto &ev = arr.events();
    const Polyline &p = arr.p();
    const Polyline &q = arr.q();
    const auto sp = cross_prefix(p);
    const auto sq = cross_prefix(q);
    const auto rank = q_ranks(arr);
    const bool closed_up = q.front() == q.back();
    std::vector<RuRegion> out;
    out.reserve(ev.size() - 1);
    for (std::size_t u = 0; u + 1 < ev.size(); ++u) {
        const auto &a = ev[u], &b = ev[u + 1];
        Rational twice = path_cross(p, sp, a.pos_p, b.pos_p) + path_cross_directed(q, sq, b.pos_q, a.pos_q);
        RuRegion r;
        r.u = u;
        r.alpha = sign(twice);
        if (r.alpha == 0) throw InternalError("degenerate region between consecutive events");
        r.area = abs(twice) / 2;
        r.key_lo = std::min(a.key, b.key);
        r.key_hi = std::max(a.key, b.key);
        r.rank_lo = std::min(rank[u], rank[u + 1]);
        r.rank_hi = std::max(rank[u], rank[u + 1]);
        r.side = departure_side(arr, u);
        if (closed_up) {
            int dir = rank[u] > rank[u + 1] ? 1 : -1;
            Side interior = r.alpha * dir > 0 ? Side::left : Side::right;
            r.complement = interior != r.side;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace homarea
