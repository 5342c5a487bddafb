#ifndef HOMAREA_SWEEP_HPP
#define HOMAREA_SWEEP_HPP

#include "homarea/winding.hpp"

#include <cstdint>
#include <vector>

namespace homarea {

enum class Along { before, after };

/// A symbolic sample next to an event on one side of the second curve. The
/// integer key is 3ρ for "before" and 3ρ+2 for "after", where ρ is the event's
/// rank along the curve; the event itself sits at 3ρ+1.
struct Representative {
    int id = 0;
    std::size_t event = 0;
    Side side = Side::left;
    Along along = Along::before;
    std::int64_t key = 0;
    int cell = -1;
};

inline std::int64_t event_key(std::size_t rank) { return 3 * static_cast<std::int64_t>(rank) + 1; }

struct RepresentativeSet {
    std::vector<Representative> left;  // sorted by key
    std::vector<Representative> right; // sorted by key
    std::int64_t key_limit = 0;        // every key is below this
    int count() const { return static_cast<int>(left.size() + right.size()); }
};

RepresentativeSet build_representatives(const Arrangement &arr);

/// Cells of the arrangement that no representative lands in (expected: none,
/// or only the unbounded cell).
std::vector<int> uncovered_cells(const Arrangement &arr, const RepresentativeSet &reps);

struct MinMax {
    int w_min = 0;
    int w_max = 0;
    int arg_min = -1; // representative ids; ties go to the smaller id
    int arg_max = -1;
};

/// Segment tree over the representatives of one side with lazy range add and
/// min/max (with argument) at the root.
class WindingIndex {
public:
    explicit WindingIndex(const std::vector<Representative> &reps);

    /// Adds delta to every representative whose key lies strictly between lo and hi.
    void range_add(std::int64_t lo, std::int64_t hi, int delta);
    /// Adds delta to every representative.
    void add_all(int delta);
    bool empty() const { return n_ == 0; }
    MinMax query_minmax() const;
    /// Current winding of the representative at sorted position k.
    int value_at(std::size_t k) const;
    void reset();

    std::uint64_t node_visits() const { return visits_; }
    std::uint64_t updates() const { return updates_; }

private:
    void update(int v, int l, int r, int ql, int qr, int delta);
    void pull(int v);

    int n_ = 0;
    std::vector<std::int64_t> keys_;
    std::vector<int> ids_;
    std::vector<int> add_, mn_, mx_, amn_, amx_;
    std::uint64_t visits_ = 0;
    std::uint64_t updates_ = 0;
};

/// Combines several side results; ties go to the smaller id.
MinMax combine(const MinMax &a, const MinMax &b);

} // namespace homarea

#endif
