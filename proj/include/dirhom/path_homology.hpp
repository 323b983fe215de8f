#pragma once

#include <map>
#include <vector>

#include "dirhom/graph.hpp"
#include "dirhom/sparse_matrix.hpp"
#include "dirhom/summary.hpp"

namespace dirhom {

// Sequence of p+1 vertices; regular when no two consecutive entries repeat,
// allowed when every consecutive pair is an arc.
using ElementaryPath = std::vector<VertexId>;

/** Formal linear combination of elementary paths of one degree. */
struct PathChain {
    int degree = 0;
    FieldSpec field = FieldSpec::rationals();
    std::map<ElementaryPath, Rational> terms;  // nonzero coefficients, lex-ordered keys
};

/**
 * Boundary of the allowed p-paths split by where the faces land. Columns are
 * indexed by `domain` (the allowed p-paths); rows of `allowed_block` by the
 * allowed (p-1)-paths, rows of `non_allowed_block` by the distinct regular
 * but non-allowed faces that occur, in lexicographic order. Irregular faces
 * (consecutive repeat after omission) are identified with zero and dropped.
 */
struct BoundaryBlocks {
    std::vector<ElementaryPath> domain;
    std::vector<ElementaryPath> allowed_rows;
    std::vector<ElementaryPath> non_allowed_rows;
    SparseMatrix allowed_block;
    SparseMatrix non_allowed_block;
};

/** Basis of the boundary-invariant subspace Omega_p inside the allowed p-paths. */
struct OmegaBasis {
    int degree = 0;
    std::vector<ElementaryPath> allowed;  // coordinate basis, lexicographic
    SparseMatrix basis;                   // |allowed| x dim(Omega_p), canonical columns
    Index dimension() const { return basis.cols(); }
};

// All allowed p-paths in lexicographic order. p = 0 lists every vertex.
std::vector<ElementaryPath> allowed_paths(const Digraph& g, int p);

BoundaryBlocks boundary_blocks(const Digraph& g, int p, FieldSpec field);  // p >= 1

OmegaBasis omega_basis(const Digraph& g, int p, FieldSpec field);

/**
 * Betti numbers of the invariant-path chain complex for degrees
 * 0..max_degree. Reduced mode (the default elsewhere in this project)
 * augments degree 0 with the coefficient-sum map. For acyclic inputs degrees
 * beyond the longest path are structurally zero and cost nothing; for cyclic
 * inputs the caller's max_degree bounds the enumeration.
 */
HomologySummary path_betti(const Digraph& g, int max_degree, bool reduced, FieldSpec field);

// Closed-form reduced path Betti vector of an MLP digraph: prod_i (n_i - 1)
// in degree L-1, zero elsewhere.
std::vector<Index> mlp_path_betti_prediction(const MlpSpec& spec, int max_degree);

/**
 * The explicit generating cycles of the top-degree path homology of an MLP:
 * one chain per choice of a non-anchor vertex in every layer, obtained by
 * expanding the product of per-layer differences (first vertex minus chosen
 * vertex). Each chain has 2^L terms with coefficients +-1, lies in
 * Omega_{L-1}, and is killed by the boundary map; together they are linearly
 * independent and span the kernel.
 */
std::vector<PathChain> explicit_cycle_basis(const MlpSpec& spec);

}  // namespace dirhom
