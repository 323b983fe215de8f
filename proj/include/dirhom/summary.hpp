#pragma once

#include <string>
#include <vector>

#include "dirhom/field.hpp"
#include "dirhom/graph.hpp"

namespace dirhom {

enum class HomologyKind { path, dfc };

std::string to_string(HomologyKind kind);
HomologyKind homology_kind_from_string(const std::string& s);

struct DegreeData {
    Index dim_allowed = 0;    // dim of the degree-p chain coordinate space
    Index dim_omega = 0;      // dim of the boundary-invariant subspace (= dim_allowed for dfc)
    Index rank_boundary = 0;  // rank of the boundary map leaving degree p;
                              // in reduced mode degree 0 holds the augmentation rank
    Index betti = 0;
    bool operator==(const DegreeData&) const = default;
};

/**
 * Betti numbers and the ranks behind them, degrees 0..max_degree. Satisfies
 * betti(p) = dim_omega(p) - rank_boundary(p) - rank_boundary(p+1) with the
 * rank beyond max_degree folded in during computation.
 */
struct HomologySummary {
    HomologyKind kind = HomologyKind::path;
    FieldSpec field = FieldSpec::rationals();
    bool reduced = true;
    bool empty_graph = false;
    int max_degree = 0;
    std::vector<DegreeData> degrees;  // size max_degree + 1

    std::vector<Index> betti_vector() const {
        std::vector<Index> b;
        b.reserve(degrees.size());
        for (const DegreeData& d : degrees) b.push_back(d.betti);
        return b;
    }

    bool operator==(const HomologySummary&) const = default;
};

}  // namespace dirhom
