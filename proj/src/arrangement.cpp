#include "homarea/arrangement.hpp"

#include "homarea/errors.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <numeric>
#include <random>

namespace homarea {

namespace {

struct SegBox {
    Rational xmin, xmax, ymin, ymax;
    std::size_t index;
    int owner;
};

SegBox box_of(const Segment &s, std::size_t index, int owner) {
    SegBox b;
    b.xmin = std::min(s.a.x, s.b.x);
    b.xmax = std::max(s.a.x, s.b.x);
    b.ymin = std::min(s.a.y, s.b.y);
    b.ymax = std::max(s.a.y, s.b.y);
    b.index = index;
    b.owner = owner;
    return b;
}

// Calls f(a, b) for every pair of boxes whose closed extents overlap, with
// a.owner <= b.owner. Sort-and-sweep on x.
template <class F>
void for_each_overlap(std::vector<SegBox> boxes, bool cross_owner_only, F f) {
    std::sort(boxes.begin(), boxes.end(), [](const SegBox &a, const SegBox &b) { return a.xmin < b.xmin; });
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        for (std::size_t j = i + 1; j < boxes.size() && boxes[j].xmin <= boxes[i].xmax; ++j) {
            const SegBox &a = boxes[i], &b = boxes[j];
            if (cross_owner_only && a.owner == b.owner) continue;
            if (a.ymax < b.ymin || b.ymax < a.ymin) continue;
            if (a.owner < b.owner || (a.owner == b.owner && a.index < b.index)) f(a, b);
            else f(b, a);
        }
    }
}

struct RawHit {
    Point point;
    CurvePosition pos_p;
    CurvePosition pos_q;
};

CurvePosition normalized(std::size_t segment, const Rational &t) {
    if (t == 1) return {segment + 1, 0};
    return {segment, t};
}

bool is_based_loop(const Polyline &poly) { return !poly.closed() && poly.front() == poly.back(); }

// Transversal crossings plus touches at `allowed` points; anything else throws.
std::vector<RawHit> find_crossings(const Polyline &p, const Polyline &q, const std::vector<Point> &allowed) {
    std::vector<SegBox> boxes;
    for (std::size_t i = 0; i < p.segment_count(); ++i) boxes.push_back(box_of(p.segment(i), i, 0));
    for (std::size_t j = 0; j < q.segment_count(); ++j) boxes.push_back(box_of(q.segment(j), j, 1));

    std::map<Point, RawHit, PointLess> hits;
    for_each_overlap(std::move(boxes), true, [&](const SegBox &a, const SegBox &b) {
        auto hit = segment_intersection(p.segment(a.index), q.segment(b.index));
        if (!hit) return;
        if (hit->kind == HitKind::degenerate) {
            if (!hit->point)
                throw DegenerateInput("curves overlap along segment P[" + std::to_string(a.index) + "] / Q[" +
                                      std::to_string(b.index) + "]");
            throw DegenerateInput("vertex lies on the other curve at " + to_string(*hit->point));
        }
        const Point &pt = *hit->point;
        RawHit raw{pt, normalized(a.index, hit->t), normalized(b.index, hit->u)};
        if (hit->kind == HitKind::endpoint_shared) {
            if (std::find(allowed.begin(), allowed.end(), pt) == allowed.end())
                throw DegenerateInput("curves touch at shared vertex " + to_string(pt));
            hits.emplace(pt, raw);
            return;
        }
        if (!hits.emplace(pt, raw).second)
            throw DegenerateInput("two crossings coincide at " + to_string(pt));
    });
    std::vector<RawHit> out;
    out.reserve(hits.size());
    for (auto &[pt, h] : hits) out.push_back(std::move(h));
    return out;
}

Point direction_at(const Polyline &poly, const CurvePosition &pos) {
    std::size_t s = std::min(pos.segment, poly.segment_count() - 1);
    Segment seg = poly.segment(s);
    return {seg.b.x - seg.a.x, seg.b.y - seg.a.y};
}

std::vector<IntersectionEvent> make_events(const Polyline &p, const Polyline &q, const QFrame &frame) {
    std::vector<Point> allowed{p.front(), p.back()};
    std::vector<RawHit> raw = find_crossings(p, q, allowed);
    const bool loop = is_based_loop(p);
    std::vector<IntersectionEvent> events;
    for (const RawHit &h : raw) {
        if (loop && h.point == p.front()) {
            // the cut point is both the first and the last event
            IntersectionEvent first{h.point, {0, 0}, {0, 0}, 0, 0, true};
            IntersectionEvent last{h.point, {p.segment_count(), 0}, {q.segment_count(), 0}, 0, 0, true};
            events.push_back(first);
            events.push_back(last);
            continue;
        }
        IntersectionEvent e;
        e.point = h.point;
        e.pos_p = h.pos_p;
        e.pos_q = h.pos_q;
        events.push_back(std::move(e));
    }
    for (IntersectionEvent &e : events) {
        e.key = Rational(static_cast<long>(e.pos_q.segment) - static_cast<long>(frame.origin)) + e.pos_q.t;
        e.genuine = e.key >= 0 && e.key <= Rational(static_cast<long>(frame.length));
        e.crossing_sign = sgn(cross(direction_at(p, e.pos_p), direction_at(q, e.pos_q)));
    }
    std::sort(events.begin(), events.end(),
              [](const IntersectionEvent &a, const IntersectionEvent &b) { return a.pos_p < b.pos_p; });
    if (events.size() < 2 || events.front().pos_p != CurvePosition{0, 0} ||
        events.back().pos_p != CurvePosition{p.segment_count(), 0})
        throw EndpointMismatch();
    return events;
}

std::uint64_t edge_key(int u, int v) {
    auto a = static_cast<std::uint64_t>(std::min(u, v)), b = static_cast<std::uint64_t>(std::max(u, v));
    return (a << 32) | b;
}

Point midpoint(const Point &a, const Point &b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

} // namespace

void validate_simple(const Polyline &poly, const char *name, bool allow_based_loop) {
    const bool loop = is_based_loop(poly);
    if (loop && !allow_based_loop) throw NotSimple(name);
    const std::size_t n = poly.segment_count();
    if (loop && n < 3) throw NotSimple(name);
    const bool wraps = poly.closed() || loop;
    std::vector<SegBox> boxes;
    for (std::size_t i = 0; i < n; ++i) boxes.push_back(box_of(poly.segment(i), i, 0));
    for_each_overlap(std::move(boxes), false, [&](const SegBox &a, const SegBox &b) {
        std::size_t i = a.index, j = b.index;
        auto hit = segment_intersection(poly.segment(i), poly.segment(j));
        if (!hit) return;
        bool adjacent = (j == i + 1) || (wraps && i == 0 && j == n - 1);
        if (!adjacent || hit->kind != HitKind::endpoint_shared) throw NotSimple(name);
    });
}

void validate_inputs(const Polyline &p, const Polyline &q, ValidateOptions options) {
    if (p.closed() || q.closed()) throw InputError("paths must be open polylines");
    if (p.front() != q.front() || p.back() != q.back()) throw EndpointMismatch();
    validate_simple(p, "P", options.allow_based_loops);
    validate_simple(q, "Q", options.allow_based_loops);
    make_events(p, q, QFrame{0, q.segment_count()});
}

std::vector<IntersectionEvent> compute_intersections(const Polyline &p, const Polyline &q) {
    return make_events(p, q, QFrame{0, q.segment_count()});
}

std::vector<CycleCrossing> cycle_crossings(const Polyline &p, const Polyline &q) {
    std::vector<CycleCrossing> out;
    for (const RawHit &h : find_crossings(p, q, {})) out.push_back({h.point, h.pos_p, h.pos_q});
    std::sort(out.begin(), out.end(),
              [](const CycleCrossing &a, const CycleCrossing &b) { return a.pos_p < b.pos_p; });
    return out;
}

Arrangement::Arrangement(Polyline p, Polyline q, QFrame frame)
    : p_(std::move(p)), q_(std::move(q)), frame_(frame) {
    events_ = make_events(p_, q_, frame_);
    const std::size_t ne = events_.size();
    const bool loop = is_based_loop(p_);

    std::map<Point, int, PointLess> ids;
    std::vector<Point> points;
    auto id_of = [&](const Point &pt) {
        auto [it, fresh] = ids.emplace(pt, static_cast<int>(points.size()));
        if (fresh) points.push_back(pt);
        return it->second;
    };

    // P chain with events spliced in; events are already in P order.
    std::vector<int> p_chain;
    std::vector<int> p_chain_event; // event index or -1
    {
        const auto v = p_.open_vertices();
        std::size_t e = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            bool vertex_is_event = e < ne && events_[e].pos_p == CurvePosition{i, 0};
            p_chain.push_back(id_of(v[i]));
            p_chain_event.push_back(vertex_is_event ? static_cast<int>(e) : -1);
            if (vertex_is_event) ++e;
            while (e < ne && events_[e].pos_p.segment == i && events_[e].pos_p.t != 0) {
                p_chain.push_back(id_of(events_[e].point));
                p_chain_event.push_back(static_cast<int>(e));
                ++e;
            }
        }
    }

    // q chain
    std::vector<std::size_t> by_q(ne);
    std::iota(by_q.begin(), by_q.end(), 0);
    std::sort(by_q.begin(), by_q.end(),
              [&](std::size_t a, std::size_t b) { return events_[a].pos_q < events_[b].pos_q; });
    std::vector<int> q_chain;
    std::vector<int> q_chain_event;
    std::vector<int> event_q_index(ne, -1);
    {
        const auto v = q_.open_vertices();
        std::size_t k = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            q_chain.push_back(id_of(v[i]));
            q_chain_event.push_back(-1);
            while (k < ne && events_[by_q[k]].pos_q == CurvePosition{i, 0}) {
                q_chain_event.back() = static_cast<int>(by_q[k]);
                event_q_index[by_q[k]] = static_cast<int>(q_chain.size()) - 1;
                ++k;
            }
            while (k < ne && events_[by_q[k]].pos_q.segment == i && events_[by_q[k]].pos_q.t != 0) {
                q_chain.push_back(id_of(events_[by_q[k]].point));
                q_chain_event.push_back(static_cast<int>(by_q[k]));
                event_q_index[by_q[k]] = static_cast<int>(q_chain.size()) - 1;
                ++k;
            }
        }
    }

    std::vector<std::pair<int, int>> constraints;
    for (std::size_t i = 0; i + 1 < p_chain.size(); ++i) {
        constraints.emplace_back(p_chain[i], p_chain[i + 1]);
        edge_tags_.emplace_back(edge_key(p_chain[i], p_chain[i + 1]), CurveTag::p);
    }
    for (std::size_t i = 0; i + 1 < q_chain.size(); ++i) {
        constraints.emplace_back(q_chain[i], q_chain[i + 1]);
        edge_tags_.emplace_back(edge_key(q_chain[i], q_chain[i + 1]), CurveTag::q);
    }
    std::sort(edge_tags_.begin(), edge_tags_.end());
    tri_ = std::make_unique<Triangulation>(points, constraints, Rational(2));

    // Arrangement vertices: events, plus chain ends that are not events.
    std::map<int, int> arr_vertex;
    event_vertex_.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        int tv = ids.at(events_[e].point);
        event_vertex_[e] = tv;
        arr_vertex.emplace(tv, static_cast<int>(arr_vertex.size()));
    }
    for (int end : {p_chain.front(), p_chain.back(), q_chain.front(), q_chain.back()})
        arr_vertex.emplace(end, static_cast<int>(arr_vertex.size()));
    vertex_count_ = arr_vertex.size();

    auto split_chain = [&](const std::vector<int> &chain, CurveTag tag, std::vector<int> &out) {
        std::size_t start = 0;
        for (std::size_t i = 1; i < chain.size(); ++i) {
            if (!arr_vertex.count(chain[i])) continue;
            Arc arc;
            arc.curve = tag;
            arc.from = arr_vertex.at(chain[start]);
            arc.to = arr_vertex.at(chain[i]);
            arc.chain.assign(chain.begin() + static_cast<long>(start), chain.begin() + static_cast<long>(i) + 1);
            out.push_back(static_cast<int>(arcs_.size()));
            arcs_.push_back(std::move(arc));
            start = i;
        }
    };
    split_chain(p_chain, CurveTag::p, p_arcs_);
    split_chain(q_chain, CurveTag::q, q_arcs_);
    if (p_arcs_.size() != ne - 1) throw InternalError("P arcs do not match events");

    // Cells: triangle components across unconstrained edges.
    const int nt = static_cast<int>(tri_->triangle_count());
    tri_cell_.assign(nt, -1);
    for (int s = 0; s < nt; ++s) {
        if (tri_cell_[s] >= 0) continue;
        int id = static_cast<int>(cells_.size());
        cells_.emplace_back();
        Cell &cell = cells_.back();
        cell.area = 0;
        std::vector<int> stack{s};
        tri_cell_[s] = id;
        int best = s;
        Rational best_area = tri_->area(s);
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            Rational a = tri_->area(t);
            cell.area += a;
            if (a > best_area) {
                best_area = a;
                best = t;
            }
            for (int k = 0; k < 3; ++k) {
                int n = tri_->neighbor(t, k);
                if (n < 0) {
                    cell.unbounded = true;
                    continue;
                }
                if (tri_->constrained(t, k) || tri_cell_[n] >= 0) continue;
                tri_cell_[n] = id;
                stack.push_back(n);
            }
        }
        cell.sample = tri_->centroid(best);
        if (cell.unbounded) {
            if (unbounded_ >= 0) throw InternalError("more than one unbounded cell");
            unbounded_ = id;
            cell.area = 0;
        }
    }
    if (unbounded_ < 0) throw InternalError("no unbounded cell");

    for (std::size_t a = 0; a < arcs_.size(); ++a) {
        Arc &arc = arcs_[a];
        arc.left_cell = tri_cell_[tri_->triangle_left_of(arc.chain[0], arc.chain[1])];
        arc.right_cell = tri_cell_[tri_->triangle_left_of(arc.chain[1], arc.chain[0])];
        cells_[arc.left_cell].arcs.push_back(static_cast<int>(a));
        if (arc.right_cell != arc.left_cell) cells_[arc.right_cell].arcs.push_back(static_cast<int>(a));
    }

    const bool q_loop = is_based_loop(q_);
    q_prev_.assign(ne, -1);
    q_next_.assign(ne, -1);
    const int qn = static_cast<int>(q_chain.size());
    for (std::size_t e = 0; e < ne; ++e) {
        int k = event_q_index[e];
        if (loop && e == 0) k = 0;
        if (loop && e + 1 == ne) k = qn - 1;
        if (k < 0) throw InternalError("event missing from the q chain");
        if (k > 0) q_prev_[e] = q_chain[k - 1];
        else if (q_loop) q_prev_[e] = q_chain[qn - 2];
        if (k + 1 < qn) q_next_[e] = q_chain[k + 1];
        else if (q_loop) q_next_[e] = q_chain[1];
    }
}

long Arrangement::euler_characteristic() const {
    return static_cast<long>(vertex_count_) - static_cast<long>(arcs_.size()) + static_cast<long>(cells_.size());
}

CurveTag Arrangement::constraint_curve(int u, int v) const {
    std::uint64_t key = edge_key(u, v);
    auto it = std::lower_bound(edge_tags_.begin(), edge_tags_.end(), std::make_pair(key, CurveTag::p));
    if (it == edge_tags_.end() || it->first != key) throw InternalError("edge is not a curve edge");
    return it->second;
}

int Arrangement::locate(const Point &point) const {
    for (const Polyline *poly : {&p_, &q_})
        for (std::size_t i = 0; i < poly->segment_count(); ++i) {
            Segment s = poly->segment(i);
            if (orient(s.a, s.b, point) == 0 && std::min(s.a.x, s.b.x) <= point.x &&
                point.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= point.y &&
                point.y <= std::max(s.a.y, s.b.y))
                throw OnBoundary();
        }
    int t = tri_->locate(point);
    return t < 0 ? unbounded_ : tri_cell_[t];
}

Rational Arrangement::bounded_area() const {
    Rational total = 0;
    for (const Cell &c : cells_)
        if (!c.unbounded) total += c.area;
    return total;
}

namespace {

// Point strictly inside triangle t on the ray from `through` in direction d.
Point step_inside(const Triangulation &tri, int t, const Point &through, const Point &d) {
    std::optional<Rational> best;
    const auto &v = tri.vertices(t);
    for (int k = 0; k < 3; ++k) {
        const Point &a = tri.point(v[k]), &b = tri.point(v[(k + 1) % 3]);
        Point ab{b.x - a.x, b.y - a.y};
        Rational denom = cross(d, ab);
        if (denom == 0) continue;
        Point am{a.x - through.x, a.y - through.y};
        Rational lambda = cross(am, ab) / denom;
        Rational mu = cross(am, d) / denom;
        if (lambda > 0 && mu >= 0 && mu <= 1 && (!best || lambda < *best)) best = lambda;
    }
    if (!best) throw InternalError("ray does not leave the triangle");
    Rational half = *best / 2;
    return {through.x + half * d.x, through.y + half * d.y};
}

// A polyline from triangulation vertex `start` to the box boundary that
// crosses q-edges never and p-edges as few times as possible.
std::vector<Point> route_to_infinity(const Arrangement &arr, int start, std::mt19937_64 *rng) {
    const Triangulation &tri = arr.triangulation();
    const int nt = static_cast<int>(tri.triangle_count());
    std::vector<int> sources;
    for (int t = 0; t < nt; ++t) {
        const auto &v = tri.vertices(t);
        if (v[0] == start || v[1] == start || v[2] == start) sources.push_back(t);
    }
    if (rng) std::shuffle(sources.begin(), sources.end(), *rng);

    std::vector<int> dist(nt, INT_MAX), parent(nt, -1);
    std::deque<std::pair<int, int>> queue;
    for (int s : sources) {
        dist[s] = 0;
        queue.emplace_back(s, 0);
    }
    int target = -1;
    std::array<int, 3> order{0, 1, 2};
    while (!queue.empty()) {
        auto [t, d] = queue.front();
        queue.pop_front();
        if (d > dist[t]) continue;
        bool on_hull = false;
        for (int k = 0; k < 3; ++k) on_hull = on_hull || tri.neighbor(t, k) < 0;
        if (on_hull) {
            target = t;
            break;
        }
        if (rng) std::shuffle(order.begin(), order.end(), *rng);
        for (int k : order) {
            int n = tri.neighbor(t, k);
            int w = 0;
            if (tri.constrained(t, k)) {
                const auto &v = tri.vertices(t);
                if (arr.constraint_curve(v[(k + 1) % 3], v[(k + 2) % 3]) == CurveTag::q) continue;
                w = 1;
            }
            if (d + w < dist[n]) {
                dist[n] = d + w;
                parent[n] = t;
                if (w == 0) queue.emplace_front(n, d);
                else queue.emplace_back(n, d + 1);
            }
        }
    }
    if (target < 0) throw InternalError("no route from the curve end to the unbounded cell");

    std::vector<int> path;
    for (int t = target; t >= 0; t = parent[t]) path.push_back(t);
    std::reverse(path.begin(), path.end());

    std::vector<Point> pts{tri.point(start)};
    auto push = [&](const Point &p) {
        if (pts.back() != p) pts.push_back(p);
    };
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int ta = path[i], tb = path[i + 1];
        int k = 0;
        while (tri.neighbor(ta, k) != tb) ++k;
        const auto &v = tri.vertices(ta);
        Point m = midpoint(tri.point(v[(k + 1) % 3]), tri.point(v[(k + 2) % 3]));
        if (!tri.constrained(ta, k)) {
            push(m);
            continue;
        }
        // Cross the p-edge at its midpoint without placing a vertex on it.
        const Point &w = tri.point(v[k]);
        Point a = midpoint(w, m);
        Point b = step_inside(tri, tb, m, Point{m.x - w.x, m.y - w.y});
        push(a);
        push(b);
    }
    int last = path.back();
    for (int k = 0; k < 3; ++k)
        if (tri.neighbor(last, k) < 0) {
            const auto &v = tri.vertices(last);
            push(midpoint(tri.point(v[(k + 1) % 3]), tri.point(v[(k + 2) % 3])));
            break;
        }
    return pts;
}

} // namespace

ExtendedQ extend_q(const Polyline &p, const Polyline &q, std::optional<std::uint64_t> seed) {
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);
    std::mt19937_64 *rp = rng ? &*rng : nullptr;
    const std::size_t m = q.segment_count();

    Arrangement base(p, q, QFrame{0, m});
    std::vector<Point> head = route_to_infinity(base, base.event_vertex(0), rp);

    std::vector<Point> q1(head.rbegin(), head.rend());
    q1.insert(q1.end(), q.vertices().begin() + 1, q.vertices().end());
    const std::size_t origin = head.size() - 1;
    Arrangement partial(p, Polyline(q1, false), QFrame{origin, m});
    std::vector<Point> tail = route_to_infinity(partial, partial.event_vertex(partial.events().size() - 1), rp);

    std::vector<Point> qhat_vertices = q1;
    qhat_vertices.insert(qhat_vertices.end(), tail.begin() + 1, tail.end());
    Polyline qhat(std::move(qhat_vertices), false);
    validate_simple(qhat, "extended Q");

    ExtendedQ out;
    out.frame = QFrame{origin, m};
    out.arrangement = std::make_shared<Arrangement>(p, qhat, out.frame);
    out.qhat = std::move(qhat);
    for (const IntersectionEvent &e : out.arrangement->events())
        if (!e.genuine) out.extension_events.push_back(e);
    return out;
}

} // namespace homarea
