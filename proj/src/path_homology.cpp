#include "dirhom/path_homology.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dirhom {
namespace {

void extend_paths(const Digraph& g, ElementaryPath& prefix, int remaining,
                  std::vector<ElementaryPath>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (VertexId next : g.out_neighbors(prefix.back())) {
        prefix.push_back(next);
        extend_paths(g, prefix, remaining - 1, out);
        prefix.pop_back();
    }
}

// Face of `path` with position `i` omitted, or empty when the face is
// irregular. Faces of an allowed path stay allowed except possibly across the
// new seam (path[i-1], path[i+1]).
enum class FaceKind { allowed, non_allowed, irregular };

FaceKind classify_face(const Digraph& g, const ElementaryPath& path, std::size_t i,
                       ElementaryPath& face) {
    if (i > 0 && i + 1 < path.size()) {
        if (path[i - 1] == path[i + 1]) return FaceKind::irregular;
        face.assign(path.begin(), path.end());
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        return g.has_arc(path[i - 1], path[i + 1]) ? FaceKind::allowed : FaceKind::non_allowed;
    }
    face.assign(path.begin(), path.end());
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
    return FaceKind::allowed;
}

Index row_index(const std::vector<ElementaryPath>& sorted_rows, const ElementaryPath& path) {
    auto it = std::lower_bound(sorted_rows.begin(), sorted_rows.end(), path);
    return static_cast<Index>(it - sorted_rows.begin());
}

}  // namespace

std::vector<ElementaryPath> allowed_paths(const Digraph& g, int p) {
    if (p < 0) throw BadDegree("path degree must be nonnegative");
    std::vector<ElementaryPath> out;
    ElementaryPath prefix;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        prefix.assign(1, v);
        extend_paths(g, prefix, p, out);
    }
    return out;  // lexicographic: start vertices ascend, adjacency is sorted
}

BoundaryBlocks boundary_blocks(const Digraph& g, int p, FieldSpec field) {
    if (p < 1) throw BadDegree("boundary blocks need degree >= 1");
    std::vector<ElementaryPath> domain = allowed_paths(g, p);
    std::vector<ElementaryPath> allowed_rows = allowed_paths(g, p - 1);

    std::set<ElementaryPath> non_allowed_set;
    ElementaryPath face;
    for (const ElementaryPath& path : domain)
        for (std::size_t i = 0; i < path.size(); ++i)
            if (classify_face(g, path, i, face) == FaceKind::non_allowed)
                non_allowed_set.insert(face);
    std::vector<ElementaryPath> non_allowed_rows(non_allowed_set.begin(), non_allowed_set.end());

    SparseMatrix allowed_block(static_cast<Index>(allowed_rows.size()),
                               static_cast<Index>(domain.size()), field);
    SparseMatrix non_allowed_block(static_cast<Index>(non_allowed_rows.size()),
                                   static_cast<Index>(domain.size()), field);
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const ElementaryPath& path = domain[col];
        for (std::size_t i = 0; i < path.size(); ++i) {
            FaceKind kind = classify_face(g, path, i, face);
            if (kind == FaceKind::irregular) continue;
            Rational sign = field.from_int(i % 2 == 0 ? 1 : -1);
            if (kind == FaceKind::allowed)
                allowed_block.add_to(row_index(allowed_rows, face), static_cast<Index>(col), sign);
            else
                non_allowed_block.add_to(row_index(non_allowed_rows, face),
                                         static_cast<Index>(col), sign);
        }
    }
    return BoundaryBlocks{std::move(domain), std::move(allowed_rows), std::move(non_allowed_rows),
                          std::move(allowed_block), std::move(non_allowed_block)};
}

OmegaBasis omega_basis(const Digraph& g, int p, FieldSpec field) {
    if (p < 0) throw BadDegree("omega basis needs degree >= 0");
    if (p <= 1) {
        // Faces of allowed 0/1-paths are vertices, always allowed.
        std::vector<ElementaryPath> allowed = allowed_paths(g, p);
        SparseMatrix basis = SparseMatrix::identity(static_cast<Index>(allowed.size()), field);
        return OmegaBasis{p, std::move(allowed), std::move(basis)};
    }
    BoundaryBlocks blocks = boundary_blocks(g, p, field);
    SparseMatrix basis = null_space(blocks.non_allowed_block);
    return OmegaBasis{p, std::move(blocks.domain), std::move(basis)};
}

HomologySummary path_betti(const Digraph& g, int max_degree, bool reduced, FieldSpec field) {
    if (max_degree < 0) throw BadDegree("max_degree must be nonnegative");

    HomologySummary s;
    s.kind = HomologyKind::path;
    s.field = field;
    s.reduced = reduced;
    s.empty_graph = g.vertex_count() == 0;
    s.max_degree = max_degree;
    s.degrees.resize(static_cast<std::size_t>(max_degree) + 1);

    // Acyclic graphs carry no paths beyond the longest one, so everything
    // above that degree is zero without enumeration.
    std::optional<int> longest = longest_path_length(g);
    int top_needed = max_degree + 1;
    if (longest && *longest < top_needed) top_needed = *longest;

    // dims[p], omega_dim[p], brank[p] for p = 0..max_degree+1 (brank[0] is
    // the augmentation rank in reduced mode, 0 otherwise).
    std::vector<Index> dim_allowed(static_cast<std::size_t>(max_degree) + 2, 0);
    std::vector<Index> dim_omega(static_cast<std::size_t>(max_degree) + 2, 0);
    std::vector<Index> brank(static_cast<std::size_t>(max_degree) + 2, 0);

    brank[0] = (reduced && g.vertex_count() > 0) ? 1 : 0;
    dim_allowed[0] = g.vertex_count();
    dim_omega[0] = g.vertex_count();

    for (int p = 1; p <= top_needed; ++p) {
        BoundaryBlocks blocks = boundary_blocks(g, p, field);
        dim_allowed[static_cast<std::size_t>(p)] = static_cast<Index>(blocks.domain.size());
        if (p == 1) {
            dim_omega[1] = static_cast<Index>(blocks.domain.size());
            brank[1] = rank(blocks.allowed_block);
        } else {
            SparseMatrix omega = null_space(blocks.non_allowed_block);
            dim_omega[static_cast<std::size_t>(p)] = omega.cols();
            brank[static_cast<std::size_t>(p)] = rank(multiply(blocks.allowed_block, omega));
        }
    }

    for (int p = 0; p <= max_degree; ++p) {
        DegreeData& d = s.degrees[static_cast<std::size_t>(p)];
        d.dim_allowed = dim_allowed[static_cast<std::size_t>(p)];
        d.dim_omega = dim_omega[static_cast<std::size_t>(p)];
        d.rank_boundary = brank[static_cast<std::size_t>(p)];
        d.betti = d.dim_omega - d.rank_boundary - brank[static_cast<std::size_t>(p) + 1];
    }
    return s;
}

std::vector<Index> mlp_path_betti_prediction(const MlpSpec& spec, int max_degree) {
    std::vector<Index> betti(static_cast<std::size_t>(max_degree) + 1, 0);
    int top = spec.layer_count() - 1;
    if (top <= max_degree) betti[static_cast<std::size_t>(top)] = spec.kernel_dimension();
    return betti;
}

std::vector<PathChain> explicit_cycle_basis(const MlpSpec& spec) {
    const int layers = spec.layer_count();
    std::vector<PathChain> chains;
    if (spec.kernel_dimension() == 0) return chains;

    // One chain per choice of a non-anchor vertex in every layer; iterate
    // choices odometer-style so the output order is lexicographic.
    std::vector<int> choice(static_cast<std::size_t>(layers), 1);
    const FieldSpec field = FieldSpec::rationals();
    for (;;) {
        PathChain chain;
        chain.degree = layers - 1;
        chain.field = field;
        for (std::uint32_t mask = 0; mask < (1u << layers); ++mask) {
            ElementaryPath path(static_cast<std::size_t>(layers));
            int sign = 1;
            for (int layer = 0; layer < layers; ++layer) {
                bool take_choice = (mask >> layer) & 1u;
                if (take_choice) sign = -sign;
                path[static_cast<std::size_t>(layer)] =
                    spec.vertex(layer, take_choice ? choice[static_cast<std::size_t>(layer)] : 0);
            }
            chain.terms[std::move(path)] = field.from_int(sign);
        }
        chains.push_back(std::move(chain));

        int layer = layers - 1;
        while (layer >= 0 && choice[static_cast<std::size_t>(layer)] + 1 >= spec.width(layer)) {
            choice[static_cast<std::size_t>(layer)] = 1;
            --layer;
        }
        if (layer < 0) break;
        ++choice[static_cast<std::size_t>(layer)];
    }
    return chains;
}

}  // namespace dirhom
