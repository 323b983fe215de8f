#pragma once

// Shared helpers for the test suites: seeded weight generation and small
// chain/coordinate utilities. Everything here is deterministic across
// platforms (raw mt19937_64 draws only).

#include <random>
#include <set>
#include <string>
#include <vector>

#include "dirhom/graph.hpp"
#include "dirhom/path_homology.hpp"
#include "dirhom/sparse_matrix.hpp"

namespace dirhom::testing {

// Distinct-magnitude decimal weights with mixed signs, three fractional
// digits, magnitudes in (0, 1000].
inline std::vector<Decimal> random_distinct_weights(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> used;
    std::vector<Decimal> weights;
    weights.reserve(count);
    while (weights.size() < count) {
        std::uint64_t magnitude = 1 + rng() % 1000000;
        if (!used.insert(magnitude).second) continue;
        bool negative = rng() % 2 == 1;
        std::string text = (negative ? "-" : "") + std::to_string(magnitude) + "e-3";
        weights.push_back(Decimal::parse(text));
    }
    return weights;
}

inline WeightedDigraph with_random_weights(const Digraph& g, std::uint64_t seed) {
    return WeightedDigraph(g, random_distinct_weights(
                                  seed, static_cast<std::size_t>(g.arc_count())));
}

// Coordinates of a chain in the lexicographic allowed-path basis, as a
// one-column matrix. Fails the caller's expectations loudly if a term is not
// an allowed path of the right degree.
inline SparseMatrix chain_coordinates(const PathChain& chain,
                                      const std::vector<ElementaryPath>& basis) {
    SparseMatrix column(static_cast<Index>(basis.size()), 1, chain.field);
    for (const auto& [path, coeff] : chain.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), path);
        if (it == basis.end() || *it != path)
            throw std::logic_error("chain term is not an allowed path");
        column.set(static_cast<Index>(it - basis.begin()), 0, coeff);
    }
    return column;
}

}  // namespace dirhom::testing
