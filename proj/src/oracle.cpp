#include "homarea/oracle.hpp"

#include "homarea/errors.hpp"
#include "homarea/homotopy.hpp"
#include "homarea/winding.hpp"

#include <algorithm>

namespace homarea {

namespace {

// Crossings of the ray x + λd (λ > 0) with each segment of poly.
template <class Hit>
std::vector<Hit> ray_hits(const Polyline &poly, const Point &x, const Point &d) {
    std::vector<Hit> out;
    Point far{x.x + d.x, x.y + d.y};
    for (std::size_t s = 0; s < poly.segment_count(); ++s) {
        Segment seg = poly.segment(s);
        int oa = orient(x, far, seg.a), ob = orient(x, far, seg.b);
        if (oa == ob || oa == 0 || ob == 0) continue;
        Point ab{seg.b.x - seg.a.x, seg.b.y - seg.a.y};
        Point ax{seg.a.x - x.x, seg.a.y - x.y};
        Rational denom = cross(d, ab);
        Rational lambda = cross(ax, ab) / denom;
        if (lambda <= 0) continue;
        Rational mu = cross(ax, d) / denom;
        out.push_back(Hit{CurvePosition{s, mu}, orient(x, seg.a, seg.b) > 0 ? 1 : -1});
    }
    std::sort(out.begin(), out.end(), [](const Hit &a, const Hit &b) { return a.pos < b.pos; });
    return out;
}

} // namespace

PairOracle::PairOracle(const Polyline &p, const Polyline &q) : arr_(p, q, QFrame{0, q.segment_count()}) {
    std::vector<Point> avoid(p.vertices().begin(), p.vertices().end());
    avoid.insert(avoid.end(), q.vertices().begin(), q.vertices().end());
    for (const auto &e : arr_.events()) avoid.push_back(e.point);
    for (const Cell &c : arr_.cells()) {
        Point d = generic_ray(c.sample, avoid);
        p_hits_.push_back(ray_hits<Hit>(p, c.sample, d));
        q_hits_.push_back(ray_hits<Hit>(q, c.sample, d));
    }
}

int PairOracle::count(const std::vector<Hit> &hits, const CurvePosition &a, const CurvePosition &b) const {
    int total = 0;
    for (const Hit &h : hits)
        if (a < h.pos && h.pos < b) total += h.sign;
    return total;
}

std::vector<int> PairOracle::windings(std::size_t j, std::size_t i) const {
    const auto &ev = arr_.events();
    const CurvePosition &pj = ev[j].pos_p, &pi = ev[i].pos_p;
    const CurvePosition &qj = ev[j].pos_q, &qi = ev[i].pos_q;
    std::vector<int> out(arr_.cells().size(), 0);
    for (std::size_t c = 0; c < out.size(); ++c) {
        if (arr_.cells()[c].unbounded) continue;
        int w = pj < pi ? count(p_hits_[c], pj, pi) : -count(p_hits_[c], pi, pj);
        // back along Q from i to j
        w += qi < qj ? count(q_hits_[c], qi, qj) : -count(q_hits_[c], qj, qi);
        out[c] = w;
    }
    return out;
}

OraclePair PairOracle::pair_data(std::size_t j, std::size_t i) const {
    auto w = windings(j, i);
    OraclePair out;
    out.W = 0;
    for (std::size_t c = 0; c < w.size(); ++c) {
        out.W += w[c] * arr_.cells()[c].area;
        out.w_min = std::min(out.w_min, w[c]);
        out.w_max = std::max(out.w_max, w[c]);
    }
    out.consistent = out.w_min >= 0 || out.w_max <= 0;
    out.order_ok = arr_.events()[j].pos_q < arr_.events()[i].pos_q;
    return out;
}

OraclePair oracle_pair_data(const Polyline &p, const Polyline &q, std::size_t j, std::size_t i) {
    validate_inputs(p, q, {true});
    return PairOracle(p, q).pair_data(j, i);
}

namespace {

Rational chain_dp(std::size_t n, const std::function<std::optional<Rational>(std::size_t, std::size_t)> &cost) {
    std::vector<std::optional<Rational>> T(n);
    T[0] = Rational(0);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (!T[j]) continue;
            auto c = cost(j, i);
            if (!c) continue;
            Rational total = *T[j] + *c;
            if (!T[i] || total < *T[i]) T[i] = total;
        }
    if (!T[n - 1]) throw NoValidChain();
    return *T[n - 1];
}

Rational planar_dp(const PairOracle &oracle) {
    return chain_dp(oracle.event_count(), [&](std::size_t j, std::size_t i) -> std::optional<Rational> {
        OraclePair d = oracle.pair_data(j, i);
        if (!d.valid()) return std::nullopt;
        return abs(d.W);
    });
}

} // namespace

Rational oracle_dp(const Polyline &p, const Polyline &q) {
    validate_inputs(p, q, {true});
    return planar_dp(PairOracle(p, q));
}

Rational oracle_sphere(const Polyline &p, const Polyline &q, const Rational &A) {
    validate_inputs(p, q);
    PairOracle oracle(p, q);
    const Arrangement &arr = oracle.arrangement();
    const Rational outer = A - arr.bounded_area();
    if (outer <= 0) throw SphereAreaTooSmall("A = " + to_string(A));
    auto area = [&](std::size_t c) { return arr.cells()[c].unbounded ? outer : arr.cells()[c].area; };
    return chain_dp(oracle.event_count(), [&](std::size_t j, std::size_t i) -> std::optional<Rational> {
        if (!(arr.events()[j].pos_q < arr.events()[i].pos_q)) return std::nullopt;
        auto w = oracle.windings(j, i);
        std::optional<Rational> best;
        // only base cells that leave every relative winding of one sign qualify
        for (std::size_t b = 0; b < w.size(); ++b) {
            bool low = std::all_of(w.begin(), w.end(), [&](int v) { return v >= w[b]; });
            bool high = std::all_of(w.begin(), w.end(), [&](int v) { return v <= w[b]; });
            if (!low && !high) continue;
            Rational total = 0;
            for (std::size_t c = 0; c < w.size(); ++c) total += (w[c] - w[b]) * area(c);
            total = abs(total);
            if (!best || total < *best) best = total;
        }
        return best;
    });
}

OracleCycleResult oracle_cycles(const Polyline &p_in, const Polyline &q_in) {
    validate_simple(p_in, "P");
    validate_simple(q_in, "Q");
    Polyline p = counter_clockwise(p_in), q = counter_clockwise(q_in);
    auto crossings = cycle_crossings(p, q);
    OracleCycleResult out;
    if (crossings.empty()) {
        Rational ap = signed_area(p.vertices()), aq = signed_area(q.vertices());
        // nesting by a sample winding computed from scratch
        if (winding_number(p[0], q.vertices()) != 0 || winding_number(q[0], p.vertices()) != 0) {
            out.sigma = abs(ap - aq);
        } else {
            out.sigma = ap + aq;
            out.infimum = true;
        }
        return out;
    }
    std::optional<Rational> best;
    for (const CycleCrossing &c : crossings) {
        Rational s = planar_dp(PairOracle(cut_cycle(p, c.pos_p), cut_cycle(q, c.pos_q)));
        if (!best || s < *best) best = s;
    }
    out.sigma = *best;
    return out;
}

} // namespace homarea
