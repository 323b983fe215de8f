#pragma once

#include <string>
#include <vector>

#include "dirhom/decimal.hpp"
#include "dirhom/graph.hpp"
#include "dirhom/summary.hpp"

namespace dirhom {

/** Ascending distinct arc-weight magnitudes of a weighted digraph. */
struct ThresholdSchedule {
    std::vector<Decimal> values;
    std::size_t count() const { return values.size(); }
};

ThresholdSchedule magnitude_thresholds(const WeightedDigraph& wg);

// Subgraph keeping arcs with |weight| >= t; the vertex set never shrinks.
Digraph subgraph_at_threshold(const WeightedDigraph& wg, const Decimal& t);

/**
 * Betti numbers of every threshold subgraph: row j (1-based) belongs to the
 * jth smallest distinct magnitude, normalized to j/T.
 */
struct BettiCurveRow {
    Decimal threshold;
    std::size_t index = 0;  // 1-based rank of the threshold
    std::vector<Index> betti;
};

struct BettiCurve {
    HomologyKind kind = HomologyKind::path;
    bool reduced = true;
    FieldSpec field = FieldSpec::rationals();
    int max_degree = 0;
    std::size_t threshold_count = 0;
    std::vector<BettiCurveRow> rows;  // ascending threshold
};

/**
 * Computes the homology of each threshold subgraph. Rows are independent
 * read-only jobs; `threads` bounds a worker pool whose assembled output is
 * identical for every thread count.
 */
BettiCurve betti_curve(const WeightedDigraph& wg, HomologyKind kind, int max_degree, bool reduced,
                       FieldSpec field, int threads = 1);

// CSV with header threshold,normalized,beta_0,...,beta_{max_degree}; exact
// decimal thresholds, shortest round-trip normalized values.
std::string to_csv(const BettiCurve& curve);

}  // namespace dirhom
