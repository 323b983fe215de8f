#pragma once

#include <vector>

#include "dirhom/graph.hpp"
#include "dirhom/path_homology.hpp"
#include "dirhom/summary.hpp"

namespace dirhom::oracle {

/**
 * Brute-force reference implementation used to certify the engine. Works
 * straight from the definitions: enumerate every regular elementary path,
 * filter for allowedness by checking arcs pairwise, expand boundaries
 * term by term, and run textbook Gaussian elimination on dense rational
 * matrices. Shares no enumeration or elimination code with the engine;
 * rationals only. Guarded to small graphs.
 */

using DenseMatrix = std::vector<std::vector<Rational>>;  // row-major

Index dense_rank(DenseMatrix m);
DenseMatrix dense_null_space(DenseMatrix m);  // columns = kernel basis
DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b);

// Every regular elementary p-path over a vertex set (no consecutive repeat),
// in lexicographic order; ignores arcs entirely.
std::vector<ElementaryPath> all_regular_paths(VertexId vertex_count, int p);

// Boundary of the regular p-paths in regular (p-1)-path coordinates with
// irregular faces identified with zero. Rows follow all_regular_paths(p-1).
DenseMatrix regular_path_boundary(VertexId vertex_count, int p);

// Directed p-simplices found by testing every vertex sequence of length p+1
// against the pairwise-arc condition.
std::vector<std::vector<VertexId>> naive_directed_simplices(const Digraph& g, int p);

DenseMatrix naive_flag_boundary(const Digraph& g, int p);

HomologySummary oracle_path_betti(const Digraph& g, int max_degree, bool reduced);

HomologySummary oracle_dfc_betti(const Digraph& g, int max_dim, bool reduced);

}  // namespace dirhom::oracle
