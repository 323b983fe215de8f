#include "dirhom/dfc_homology.hpp"

#include <algorithm>

namespace dirhom {
namespace {

// Vertices reachable by an arc from every vertex of the simplex, i.e. the
// legal one-vertex extensions. Candidate lists are sorted, so intersecting
// keeps lexicographic enumeration order.
std::vector<VertexId> common_out_neighbors(const Digraph& g, const DirectedSimplex& simplex) {
    std::vector<VertexId> common = g.out_neighbors(simplex.front());
    std::vector<VertexId> next;
    for (std::size_t i = 1; i < simplex.size() && !common.empty(); ++i) {
        const std::vector<VertexId>& nbrs = g.out_neighbors(simplex[i]);
        next.clear();
        std::set_intersection(common.begin(), common.end(), nbrs.begin(), nbrs.end(),
                              std::back_inserter(next));
        std::swap(common, next);
    }
    return common;
}

}  // namespace

FlagComplex directed_flag_complex(const Digraph& g, int max_dim) {
    if (max_dim < 0) throw BadDegree("flag complex dimension must be nonnegative");
    FlagComplex complex;
    complex.max_dim = max_dim;
    complex.simplices.resize(static_cast<std::size_t>(max_dim) + 1);

    for (VertexId v = 0; v < g.vertex_count(); ++v)
        complex.simplices[0].push_back({v});
    for (int dim = 1; dim <= max_dim; ++dim) {
        const auto& below = complex.simplices[static_cast<std::size_t>(dim - 1)];
        auto& here = complex.simplices[static_cast<std::size_t>(dim)];
        for (const DirectedSimplex& simplex : below) {
            for (VertexId z : common_out_neighbors(g, simplex)) {
                DirectedSimplex extended = simplex;
                extended.push_back(z);
                here.push_back(std::move(extended));
            }
        }
        if (here.empty()) break;  // nothing extends further either
    }
    return complex;
}

SparseMatrix flag_boundary(const FlagComplex& complex, int p, FieldSpec field) {
    if (p < 1) throw BadDegree("flag boundary needs dimension >= 1");
    const auto& rows_list = complex.simplices[static_cast<std::size_t>(p - 1)];
    if (complex.count(p) == 0)
        return SparseMatrix(static_cast<Index>(rows_list.size()), 0, field);
    const auto& cols_list = complex.simplices[static_cast<std::size_t>(p)];

    SparseMatrix boundary(static_cast<Index>(rows_list.size()),
                          static_cast<Index>(cols_list.size()), field);
    DirectedSimplex face;
    for (std::size_t col = 0; col < cols_list.size(); ++col) {
        const DirectedSimplex& simplex = cols_list[col];
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            face.assign(simplex.begin(), simplex.end());
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = std::lower_bound(rows_list.begin(), rows_list.end(), face);
            boundary.set(static_cast<Index>(it - rows_list.begin()), static_cast<Index>(col),
                         field.from_int(i % 2 == 0 ? 1 : -1));
        }
    }
    return boundary;
}

HomologySummary dfc_betti(const Digraph& g, int max_dim, FieldSpec field, bool reduced) {
    if (max_dim < 0) throw BadDegree("max_dim must be nonnegative");
    FlagComplex complex = directed_flag_complex(g, max_dim + 1);

    HomologySummary s;
    s.kind = HomologyKind::dfc;
    s.field = field;
    s.reduced = reduced;
    s.empty_graph = g.vertex_count() == 0;
    s.max_degree = max_dim;
    s.degrees.resize(static_cast<std::size_t>(max_dim) + 1);

    std::vector<Index> brank(static_cast<std::size_t>(max_dim) + 2, 0);
    brank[0] = (reduced && g.vertex_count() > 0) ? 1 : 0;
    for (int p = 1; p <= max_dim + 1; ++p) {
        if (complex.count(p) == 0) break;
        brank[static_cast<std::size_t>(p)] = rank(flag_boundary(complex, p, field));
    }
    for (int p = 0; p <= max_dim; ++p) {
        DegreeData& d = s.degrees[static_cast<std::size_t>(p)];
        d.dim_allowed = complex.count(p);
        d.dim_omega = d.dim_allowed;
        d.rank_boundary = brank[static_cast<std::size_t>(p)];
        d.betti = d.dim_omega - d.rank_boundary - brank[static_cast<std::size_t>(p) + 1];
    }
    return s;
}

SimplicialBetti graph_simplicial_betti(const UndirectedGraph& g) {
    Components comps = connected_components(g);
    SimplicialBetti b;
    b.beta0 = comps.count;
    b.beta1 = g.edge_count() - g.vertex_count() + comps.count;
    return b;
}

SimplicialBetti mlp_dfc_betti_prediction(const MlpSpec& spec) {
    Index components = spec.layer_count() == 1 ? spec.width(0) : 1;
    SimplicialBetti b;
    b.beta0 = components;
    b.beta1 = components - spec.total_vertices() + spec.total_arcs();
    return b;
}

DfcSimplicialComparison compare_dfc_to_simplicial(const Digraph& g, FieldSpec field, int max_dim) {
    DfcSimplicialComparison cmp;
    cmp.reciprocal_arcs_present = has_reciprocal_arcs(g);
    cmp.simplicial = graph_simplicial_betti(underlying_undirected(g));
    cmp.dfc_betti = dfc_betti(g, max_dim, field, /*reduced=*/false).betti_vector();

    cmp.equal = true;
    for (std::size_t p = 0; p < cmp.dfc_betti.size(); ++p) {
        Index simplicial = p == 0 ? cmp.simplicial.beta0 : (p == 1 ? cmp.simplicial.beta1 : 0);
        if (cmp.dfc_betti[p] != simplicial) cmp.equal = false;
    }
    return cmp;
}

}  // namespace dirhom
