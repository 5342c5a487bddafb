#ifndef HOMAREA_HOMOTOPY_HPP
#define HOMAREA_HOMOTOPY_HPP

#include "homarea/sweep.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace homarea {

/// State after the sweep from r has passed genuine event i.
struct SweepEntry {
    std::size_t i = 0;
    mpz_class scaled_W;    // total winding of C[r, i] times the context's scale
    Rational W;            // filled only by the row-returning sweep_from
    bool order_ok = false; // i follows r along the second curve as well
    bool valid = false;    // order_ok and consistent windings
    MinMax minmax;         // over all representatives
};

struct SweepRow {
    std::size_t r = 0;
    std::vector<SweepEntry> entries; // one per genuine i > r, in P order
};

struct SweepStats {
    std::uint64_t sweeps = 0;
    std::uint64_t events_processed = 0;
    std::uint64_t tree_updates = 0;
    std::uint64_t node_visits = 0;
};

/// Precomputed regions and representatives for sweeping one arrangement.
class SweepContext {
public:
    /// Region areas (and any `extra` values) become integers once multiplied
    /// by scale(); the sweep runs on those integers.
    explicit SweepContext(std::shared_ptr<const Arrangement> arr, const std::vector<Rational> &extra = {});

    const Arrangement &arrangement() const { return *arr_; }
    const std::vector<RuRegion> &regions() const { return regions_; }
    const RepresentativeSet &representatives() const { return reps_; }
    /// Event indices of genuine events, in P order.
    const std::vector<std::size_t> &genuine() const { return genuine_; }
    const mpz_class &scale() const { return scale_; }
    Rational unscale(const mpz_class &v) const;

    /// Walks P from event r; calls f at every genuine event after r.
    void sweep_from(std::size_t r, const std::function<void(const SweepEntry &)> &f);
    SweepRow sweep_from(std::size_t r);

    /// Per-representative windings after the last sweep step, indexed by id.
    std::vector<int> representative_windings() const;

    const SweepStats &stats() const { return stats_; }

private:
    void apply(const RuRegion &region);

    std::shared_ptr<const Arrangement> arr_;
    std::vector<RuRegion> regions_;
    RepresentativeSet reps_;
    std::vector<std::size_t> genuine_;
    mpz_class scale_;
    std::vector<mpz_class> scaled_area_;
    WindingIndex left_, right_;
    SweepStats stats_;
};

struct Anchor {
    Point point;
    CurvePosition pos_p;
    CurvePosition pos_q; // along Q proper
    std::size_t event = 0;
};

struct HomotopyDecomposition {
    std::vector<Anchor> anchors;        // interior anchors only
    std::vector<Rational> segment_costs; // anchors.size() + 1 entries
    Rational sigma;
};

struct SolveStats {
    std::size_t events = 0;
    std::size_t genuine_events = 0;
    std::size_t extension_events = 0;
    std::size_t representatives = 0;
    SweepStats sweep;
};

struct HomotopyResult {
    Rational sigma;
    HomotopyDecomposition decomposition;
    SolveStats stats;
};

/// Cost of joining genuine events r and i in units of 1/scale(), or nothing
/// when the pair is not allowed.
using PairCost = std::function<std::optional<mpz_class>(const SweepEntry &)>;

/// Minimum-cost anchor chain from the first to the last event. Among equal
/// costs the lexicographically smallest anchor sequence wins. Throws NoValidChain.
HomotopyResult solve_chain(SweepContext &ctx, const PairCost &cost);

struct SolveOptions {
    /// Randomizes tie-breaking in the extension search.
    std::optional<std::uint64_t> seed;
};

HomotopyResult min_homotopy_area(const Polyline &p, const Polyline &q, SolveOptions options = {});

enum class CycleCase { crossing, nested, disjoint };

struct CycleResult {
    Rational sigma;
    CycleCase kind = CycleCase::crossing;
    bool infimum = false;    // value is approached but not attained
    std::optional<Point> cut; // crossing the optimal decomposition is cut at
    HomotopyDecomposition decomposition;
    SolveStats stats;
};

/// A cycle rewritten as a path from the crossing at `pos` around back to it.
Polyline cut_cycle(const Polyline &cycle, const CurvePosition &pos);
/// Both cycles oriented counter-clockwise.
Polyline counter_clockwise(const Polyline &cycle);

CycleResult min_homotopy_area_cycles(const Polyline &p, const Polyline &q);

} // namespace homarea

#endif
