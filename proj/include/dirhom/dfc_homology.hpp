#pragma once

#include <vector>

#include "dirhom/graph.hpp"
#include "dirhom/sparse_matrix.hpp"
#include "dirhom/summary.hpp"

namespace dirhom {

// Vertex sequence (x_0, ..., x_n) with an arc x_i -> x_j for every i < j.
using DirectedSimplex = std::vector<VertexId>;

/**
 * Directed flag complex of a digraph up to a dimension cap. Simplices are
 * listed per dimension in lexicographic order; every face of a stored simplex
 * is stored one dimension down.
 */
struct FlagComplex {
    int max_dim = 0;
    std::vector<std::vector<DirectedSimplex>> simplices;  // index = dimension

    Index count(int dim) const {
        if (dim < 0 || dim > max_dim) return 0;
        return static_cast<Index>(simplices[static_cast<std::size_t>(dim)].size());
    }
};

FlagComplex directed_flag_complex(const Digraph& g, int max_dim);

// Boundary matrix from dimension p to p-1 of the directed flag complex.
SparseMatrix flag_boundary(const FlagComplex& complex, int p, FieldSpec field);

/**
 * Betti numbers of the directed flag chain complex, degrees 0..max_dim.
 * Non-reduced by default throughout this project: degree 0 counts weakly
 * connected pieces.
 */
HomologySummary dfc_betti(const Digraph& g, int max_dim, FieldSpec field, bool reduced = false);

/** Betti numbers of a graph viewed as a 1-dimensional simplicial complex. */
struct SimplicialBetti {
    Index beta0 = 0;  // number of components
    Index beta1 = 0;  // independent loops: #E - #V + #components
    bool operator==(const SimplicialBetti&) const = default;
};

// Euler-characteristic computation; higher degrees vanish for a graph.
SimplicialBetti graph_simplicial_betti(const UndirectedGraph& g);

// Closed form for the DFC homology of an MLP digraph from its widths alone.
// The component count is 1 once two layers exist; a single layer of width n
// is n isolated vertices.
SimplicialBetti mlp_dfc_betti_prediction(const MlpSpec& spec);

/**
 * Side-by-side check that DFC homology equals the simplicial homology of the
 * underlying undirected graph. The equality can fail when reciprocal arcs
 * are present (two directed 1-simplices over one undirected edge), so that
 * condition is surfaced for the caller to warn about.
 */
struct DfcSimplicialComparison {
    bool equal = false;
    bool reciprocal_arcs_present = false;
    SimplicialBetti simplicial;
    std::vector<Index> dfc_betti;  // degrees 0..max computed
};

DfcSimplicialComparison compare_dfc_to_simplicial(const Digraph& g, FieldSpec field, int max_dim);

}  // namespace dirhom
