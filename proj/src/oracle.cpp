#include "dirhom/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace dirhom::oracle {
namespace {

constexpr VertexId kMaxVertices = 12;
constexpr int kMaxDegree = 6;

void check_guard(const Digraph& g, int degree) {
    if (g.vertex_count() > kMaxVertices || degree > kMaxDegree)
        throw TooLargeForOracle("oracle limited to " + std::to_string(kMaxVertices) +
                                " vertices and degree " + std::to_string(kMaxDegree));
}

std::set<Arc> arc_set(const Digraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

bool path_is_allowed(const ElementaryPath& path, const std::set<Arc>& arcs) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!arcs.count({path[i], path[i + 1]})) return false;
    return true;
}

bool face_is_regular(const ElementaryPath& face) {
    for (std::size_t i = 0; i + 1 < face.size(); ++i)
        if (face[i] == face[i + 1]) return false;
    return true;
}

ElementaryPath omit(const ElementaryPath& path, std::size_t i) {
    ElementaryPath face = path;
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
    return face;
}

}  // namespace

Index dense_rank(DenseMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    Index rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (m[r][c] != 0) {
                found = r;
                break;
            }
        if (found == rows) continue;
        std::swap(m[pivot_row], m[found]);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational factor = m[r][c] / m[pivot_row][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[pivot_row][k];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

DenseMatrix dense_null_space(DenseMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();

    // Full reduced row echelon form, textbook style.
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (m[r][c] != 0) {
                found = r;
                break;
            }
        if (found == rows) continue;
        std::swap(m[pivot_row], m[found]);
        Rational inv = 1 / m[pivot_row][c];
        for (std::size_t k = c; k < cols; ++k) m[pivot_row][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][c] == 0) continue;
            Rational factor = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[pivot_row][k];
        }
        pivot_col_of_row.push_back(c);
        ++pivot_row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    DenseMatrix kernel(cols, std::vector<Rational>(free_cols.size(), Rational(0)));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        kernel[free_cols[k]][k] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            kernel[pivot_col_of_row[r]][k] = -m[r][free_cols[k]];
    }
    return kernel;
}

DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = n == 0 ? 0 : a[0].size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    DenseMatrix out(n, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

std::vector<ElementaryPath> all_regular_paths(VertexId vertex_count, int p) {
    std::vector<ElementaryPath> out;
    ElementaryPath seq;
    // Odometer over all sequences, skipping consecutive repeats.
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(seq);
            return;
        }
        for (VertexId v = 0; v < vertex_count; ++v) {
            if (!seq.empty() && seq.back() == v) continue;
            seq.push_back(v);
            self(self, remaining - 1);
            seq.pop_back();
        }
    };
    rec(rec, p + 1);
    return out;
}

DenseMatrix regular_path_boundary(VertexId vertex_count, int p) {
    std::vector<ElementaryPath> rows = all_regular_paths(vertex_count, p - 1);
    std::vector<ElementaryPath> cols = all_regular_paths(vertex_count, p);
    std::map<ElementaryPath, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

    DenseMatrix boundary(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < cols[c].size(); ++i) {
            ElementaryPath face = omit(cols[c], i);
            if (!face_is_regular(face)) continue;
            boundary[row_of.at(face)][c] += (i % 2 == 0) ? 1 : -1;
        }
    return boundary;
}

std::vector<std::vector<VertexId>> naive_directed_simplices(const Digraph& g, int p) {
    std::set<Arc> arcs = arc_set(g);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> seq;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            for (std::size_t i = 0; i < seq.size(); ++i)
                for (std::size_t j = i + 1; j < seq.size(); ++j)
                    if (!arcs.count({seq[i], seq[j]})) return;
            out.push_back(seq);
            return;
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            seq.push_back(v);
            self(self, remaining - 1);
            seq.pop_back();
        }
    };
    rec(rec, p + 1);
    return out;
}

DenseMatrix naive_flag_boundary(const Digraph& g, int p) {
    auto rows = naive_directed_simplices(g, p - 1);
    auto cols = naive_directed_simplices(g, p);
    std::map<std::vector<VertexId>, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

    DenseMatrix boundary(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < cols[c].size(); ++i)
            boundary[row_of.at(omit(cols[c], i))][c] += (i % 2 == 0) ? 1 : -1;
    return boundary;
}

HomologySummary oracle_path_betti(const Digraph& g, int max_degree, bool reduced) {
    if (max_degree < 0) throw BadDegree("max_degree must be nonnegative");
    check_guard(g, max_degree);
    std::set<Arc> arcs = arc_set(g);

    // Per degree p: the allowed paths (filtered from the full regular list),
    // a basis of Omega_p, and the rank of the boundary restricted to it.
    std::vector<Index> dim_allowed(static_cast<std::size_t>(max_degree) + 2, 0);
    std::vector<Index> dim_omega(static_cast<std::size_t>(max_degree) + 2, 0);
    std::vector<Index> brank(static_cast<std::size_t>(max_degree) + 2, 0);
    brank[0] = (reduced && g.vertex_count() > 0) ? 1 : 0;
    dim_allowed[0] = g.vertex_count();
    dim_omega[0] = g.vertex_count();

    std::vector<ElementaryPath> allowed_below = all_regular_paths(g.vertex_count(), 0);
    for (int p = 1; p <= max_degree + 1; ++p) {
        std::vector<ElementaryPath> allowed;
        for (const ElementaryPath& path : all_regular_paths(g.vertex_count(), p))
            if (path_is_allowed(path, arcs)) allowed.push_back(path);
        dim_allowed[static_cast<std::size_t>(p)] = static_cast<Index>(allowed.size());
        if (allowed.empty()) {
            allowed_below = std::move(allowed);
            continue;
        }

        // Boundary of each allowed path, faces split into allowed
        // coordinates and (regular) non-allowed coordinates.
        std::map<ElementaryPath, std::size_t> allowed_row;
        for (std::size_t r = 0; r < allowed_below.size(); ++r) allowed_row[allowed_below[r]] = r;
        std::map<ElementaryPath, std::size_t> non_allowed_row;
        for (const ElementaryPath& path : allowed)
            for (std::size_t i = 0; i < path.size(); ++i) {
                ElementaryPath f = omit(path, i);
                if (face_is_regular(f) && !allowed_row.count(f))
                    non_allowed_row.emplace(f, non_allowed_row.size());
            }

        DenseMatrix to_allowed(allowed_below.size(),
                               std::vector<Rational>(allowed.size(), Rational(0)));
        DenseMatrix to_non_allowed(non_allowed_row.size(),
                                   std::vector<Rational>(allowed.size(), Rational(0)));
        for (std::size_t c = 0; c < allowed.size(); ++c)
            for (std::size_t i = 0; i < allowed[c].size(); ++i) {
                ElementaryPath f = omit(allowed[c], i);
                if (!face_is_regular(f)) continue;
                Rational sign = (i % 2 == 0) ? 1 : -1;
                auto it = allowed_row.find(f);
                if (it != allowed_row.end())
                    to_allowed[it->second][c] += sign;
                else
                    to_non_allowed[non_allowed_row.at(f)][c] += sign;
            }

        if (to_non_allowed.empty()) {
            // No non-allowed faces: Omega_p is the whole allowed space.
            dim_omega[static_cast<std::size_t>(p)] = static_cast<Index>(allowed.size());
            brank[static_cast<std::size_t>(p)] = dense_rank(to_allowed);
        } else {
            DenseMatrix omega = dense_null_space(std::move(to_non_allowed));
            dim_omega[static_cast<std::size_t>(p)] =
                static_cast<Index>(omega.empty() ? 0 : omega[0].size());
            brank[static_cast<std::size_t>(p)] = dense_rank(dense_product(to_allowed, omega));
        }
        allowed_below = std::move(allowed);
    }

    HomologySummary s;
    s.kind = HomologyKind::path;
    s.field = FieldSpec::rationals();
    s.reduced = reduced;
    s.empty_graph = g.vertex_count() == 0;
    s.max_degree = max_degree;
    s.degrees.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int p = 0; p <= max_degree; ++p) {
        DegreeData& d = s.degrees[static_cast<std::size_t>(p)];
        d.dim_allowed = dim_allowed[static_cast<std::size_t>(p)];
        d.dim_omega = dim_omega[static_cast<std::size_t>(p)];
        d.rank_boundary = brank[static_cast<std::size_t>(p)];
        d.betti = d.dim_omega - d.rank_boundary - brank[static_cast<std::size_t>(p) + 1];
    }
    return s;
}

HomologySummary oracle_dfc_betti(const Digraph& g, int max_dim, bool reduced) {
    if (max_dim < 0) throw BadDegree("max_dim must be nonnegative");
    check_guard(g, max_dim);

    std::vector<Index> counts(static_cast<std::size_t>(max_dim) + 2, 0);
    std::vector<Index> brank(static_cast<std::size_t>(max_dim) + 2, 0);
    brank[0] = (reduced && g.vertex_count() > 0) ? 1 : 0;
    counts[0] = g.vertex_count();
    for (int p = 1; p <= max_dim + 1; ++p) {
        auto simplices = naive_directed_simplices(g, p);
        counts[static_cast<std::size_t>(p)] = static_cast<Index>(simplices.size());
        if (!simplices.empty())
            brank[static_cast<std::size_t>(p)] = dense_rank(naive_flag_boundary(g, p));
    }

    HomologySummary s;
    s.kind = HomologyKind::dfc;
    s.field = FieldSpec::rationals();
    s.reduced = reduced;
    s.empty_graph = g.vertex_count() == 0;
    s.max_degree = max_dim;
    s.degrees.resize(static_cast<std::size_t>(max_dim) + 1);
    for (int p = 0; p <= max_dim; ++p) {
        DegreeData& d = s.degrees[static_cast<std::size_t>(p)];
        d.dim_allowed = counts[static_cast<std::size_t>(p)];
        d.dim_omega = d.dim_allowed;
        d.rank_boundary = brank[static_cast<std::size_t>(p)];
        d.betti = d.dim_omega - d.rank_boundary - brank[static_cast<std::size_t>(p) + 1];
    }
    return s;
}

}  // namespace dirhom::oracle
