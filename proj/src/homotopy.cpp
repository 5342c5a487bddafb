#include "homarea/homotopy.hpp"

#include "homarea/errors.hpp"

#include <algorithm>

namespace homarea {

SweepContext::SweepContext(std::shared_ptr<const Arrangement> arr, const std::vector<Rational> &extra)
    : arr_(std::move(arr)), regions_(ru_table(*arr_)), reps_(build_representatives(*arr_)),
      left_(reps_.left), right_(reps_.right) {
    const auto &ev = arr_->events();
    for (std::size_t e = 0; e < ev.size(); ++e)
        if (ev[e].genuine) genuine_.push_back(e);
    scale_ = 1;
    for (const RuRegion &r : regions_) mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), r.area.get_den_mpz_t());
    for (const Rational &x : extra) mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), x.get_den_mpz_t());
    scaled_area_.reserve(regions_.size());
    for (const RuRegion &r : regions_) {
        mpz_class v = r.area.get_num() * (scale_ / r.area.get_den());
        scaled_area_.push_back(r.alpha > 0 ? v : mpz_class(-v));
    }
}

Rational SweepContext::unscale(const mpz_class &v) const {
    Rational out(v, scale_);
    out.canonicalize();
    return out;
}

void SweepContext::apply(const RuRegion &region) {
    const std::int64_t lo = event_key(region.rank_lo), hi = event_key(region.rank_hi);
    WindingIndex &same = region.side == Side::left ? left_ : right_;
    WindingIndex &other = region.side == Side::left ? right_ : left_;
    if (!region.complement) {
        same.range_add(lo, hi, region.alpha);
        return;
    }
    same.range_add(-1, lo, region.alpha);
    same.range_add(hi, reps_.key_limit, region.alpha);
    other.add_all(region.alpha);
}

void SweepContext::sweep_from(std::size_t r, const std::function<void(const SweepEntry &)> &f) {
    const auto &ev = arr_->events();
    left_.reset();
    right_.reset();
    const std::uint64_t updates0 = left_.updates() + right_.updates();
    const std::uint64_t visits0 = left_.node_visits() + right_.node_visits();
    ++stats_.sweeps;
    SweepEntry entry;
    entry.scaled_W = 0;
    for (std::size_t u = r; u + 1 < ev.size(); ++u) {
        apply(regions_[u]);
        entry.scaled_W += scaled_area_[u];
        ++stats_.events_processed;
        const std::size_t i = u + 1;
        if (!ev[i].genuine) continue;
        entry.i = i;
        entry.order_ok = ev[i].key > ev[r].key;
        entry.minmax = combine(left_.query_minmax(), right_.query_minmax());
        entry.valid = entry.order_ok && (entry.minmax.w_min >= 0 || entry.minmax.w_max <= 0);
        f(entry);
    }
    stats_.tree_updates += left_.updates() + right_.updates() - updates0;
    stats_.node_visits += left_.node_visits() + right_.node_visits() - visits0;
}

SweepRow SweepContext::sweep_from(std::size_t r) {
    SweepRow row;
    row.r = r;
    sweep_from(r, [&](const SweepEntry &e) {
        row.entries.push_back(e);
        row.entries.back().W = unscale(e.scaled_W);
    });
    return row;
}

std::vector<int> SweepContext::representative_windings() const {
    std::vector<int> out(reps_.count());
    for (std::size_t k = 0; k < reps_.left.size(); ++k) out[reps_.left[k].id] = left_.value_at(k);
    for (std::size_t k = 0; k < reps_.right.size(); ++k) out[reps_.right[k].id] = right_.value_at(k);
    return out;
}

namespace {

CurvePosition q_position(const IntersectionEvent &e, const QFrame &frame) {
    return {e.pos_q.segment - frame.origin, e.pos_q.t};
}

} // namespace

HomotopyResult solve_chain(SweepContext &ctx, const PairCost &cost) {
    const Arrangement &arr = ctx.arrangement();
    const auto &g = ctx.genuine();
    const std::size_t G = g.size();
    if (G < 2) throw InternalError("fewer than two genuine events");
    // event index -> position among genuine events
    std::vector<std::size_t> slot(arr.events().size(), SIZE_MAX);
    for (std::size_t k = 0; k < G; ++k) slot[g[k]] = k;

    std::vector<std::optional<mpz_class>> best(G);
    std::vector<std::size_t> next(G, SIZE_MAX);
    std::vector<mpz_class> step(G);
    best[G - 1] = mpz_class(0);
    mpz_class total;
    for (std::size_t k = G - 1; k-- > 0;) {
        std::optional<mpz_class> final_total;
        mpz_class final_cost;
        std::optional<mpz_class> inner_total;
        std::size_t inner_next = SIZE_MAX;
        mpz_class inner_cost;
        ctx.sweep_from(g[k], [&](const SweepEntry &e) {
            std::size_t s = slot[e.i];
            if (!best[s]) return;
            auto c = cost(e);
            if (!c) return;
            total = *c + *best[s];
            if (s == G - 1) {
                final_total = total;
                final_cost = *c;
            } else if (!inner_total || total < *inner_total) {
                inner_total = total;
                inner_next = s;
                inner_cost = *c;
            }
        });
        // the direct jump to the end comes first, then ascending anchors
        if (final_total && (!inner_total || *final_total <= *inner_total)) {
            best[k] = final_total;
            next[k] = G - 1;
            step[k] = final_cost;
        } else if (inner_total) {
            best[k] = inner_total;
            next[k] = inner_next;
            step[k] = inner_cost;
        }
    }
    if (!best[0]) throw NoValidChain();

    HomotopyResult out;
    out.sigma = ctx.unscale(*best[0]);
    for (std::size_t k = 0; k != G - 1; k = next[k]) {
        out.decomposition.segment_costs.push_back(ctx.unscale(step[k]));
        std::size_t n = next[k];
        if (n == G - 1) break;
        const IntersectionEvent &e = arr.events()[g[n]];
        out.decomposition.anchors.push_back({e.point, e.pos_p, q_position(e, arr.frame()), g[n]});
    }
    out.decomposition.sigma = out.sigma;
    out.stats.events = arr.events().size();
    out.stats.genuine_events = G;
    out.stats.extension_events = arr.events().size() - G;
    out.stats.representatives = static_cast<std::size_t>(ctx.representatives().count());
    out.stats.sweep = ctx.stats();
    return out;
}

namespace {

std::optional<mpz_class> planar_cost(const SweepEntry &e) {
    if (!e.valid) return std::nullopt;
    return mpz_class(abs(e.scaled_W));
}

} // namespace

HomotopyResult min_homotopy_area(const Polyline &p, const Polyline &q, SolveOptions options) {
    validate_inputs(p, q);
    ExtendedQ ext = extend_q(p, q, options.seed);
    SweepContext ctx(ext.arrangement);
    return solve_chain(ctx, planar_cost);
}

Polyline counter_clockwise(const Polyline &cycle) {
    auto v = cycle.vertices();
    if (signed_area(v) > 0) return cycle;
    return cycle.reversed();
}

Polyline cut_cycle(const Polyline &cycle, const CurvePosition &pos) {
    const auto &v = cycle.vertices();
    const std::size_t n = v.size();
    Point c = cycle.point_at(pos);
    std::vector<Point> out{c};
    for (std::size_t k = 1; k <= n; ++k) {
        const Point &w = v[(pos.segment + k) % n];
        if (w != c) out.push_back(w);
    }
    if (out.back() != c) out.push_back(c);
    return Polyline(std::move(out), false);
}

CycleResult min_homotopy_area_cycles(const Polyline &p_in, const Polyline &q_in) {
    if (!p_in.closed() || !q_in.closed()) throw InputError("cycles must be closed polylines");
    validate_simple(p_in, "P");
    validate_simple(q_in, "Q");
    Polyline p = counter_clockwise(p_in), q = counter_clockwise(q_in);
    auto crossings = cycle_crossings(p, q);
    CycleResult out;
    if (crossings.empty()) {
        Rational ap = signed_area(p.vertices()), aq = signed_area(q.vertices());
        bool p_in_q = winding_number(p[0], q.vertices()) != 0;
        bool q_in_p = winding_number(q[0], p.vertices()) != 0;
        if (p_in_q || q_in_p) {
            out.kind = CycleCase::nested;
            out.sigma = abs(aq - ap);
        } else {
            out.kind = CycleCase::disjoint;
            out.sigma = ap + aq;
            out.infimum = true;
        }
        out.decomposition.sigma = out.sigma;
        out.decomposition.segment_costs.push_back(out.sigma);
        return out;
    }
    out.kind = CycleCase::crossing;
    bool have = false;
    for (const CycleCrossing &c : crossings) {
        Polyline pc = cut_cycle(p, c.pos_p), qc = cut_cycle(q, c.pos_q);
        auto arr = std::make_shared<const Arrangement>(pc, qc, QFrame{0, qc.segment_count()});
        SweepContext ctx(arr);
        HomotopyResult r = solve_chain(ctx, planar_cost);
        if (!have || r.sigma < out.sigma) {
            have = true;
            out.sigma = r.sigma;
            out.cut = c.point;
            out.decomposition = std::move(r.decomposition);
            out.stats = r.stats;
        }
    }
    return out;
}

} // namespace homarea
