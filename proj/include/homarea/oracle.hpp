#ifndef HOMAREA_ORACLE_HPP
#define HOMAREA_ORACLE_HPP

#include "homarea/arrangement.hpp"

#include <optional>

namespace homarea {

// Brute-force references. They use only the cells of arr(P+Q) and ray
// shooting from each cell's sample point; none of the sweep machinery.

struct OraclePair {
    Rational W;
    bool consistent = false; // all windings >= 0 or all <= 0
    bool order_ok = false;   // i after j along Q as well
    int w_min = 0;
    int w_max = 0;
    bool valid() const { return consistent && order_ok; }
};

class PairOracle {
public:
    /// Works for paths and for based loops (paths cut at a crossing).
    PairOracle(const Polyline &p, const Polyline &q);

    const Arrangement &arrangement() const { return arr_; }
    std::size_t event_count() const { return arr_.events().size(); }
    /// Winding of every cell with respect to C[j, i].
    std::vector<int> windings(std::size_t j, std::size_t i) const;
    OraclePair pair_data(std::size_t j, std::size_t i) const;

private:
    struct Hit {
        CurvePosition pos;
        int sign;
    };
    int count(const std::vector<Hit> &hits, const CurvePosition &a, const CurvePosition &b) const;

    Arrangement arr_;
    std::vector<std::vector<Hit>> p_hits_, q_hits_; // per cell, sorted by position
};

OraclePair oracle_pair_data(const Polyline &p, const Polyline &q, std::size_t j, std::size_t i);
Rational oracle_dp(const Polyline &p, const Polyline &q);
Rational oracle_sphere(const Polyline &p, const Polyline &q, const Rational &A);

struct OracleCycleResult {
    Rational sigma;
    bool infimum = false;
};
OracleCycleResult oracle_cycles(const Polyline &p, const Polyline &q);

} // namespace homarea

#endif
