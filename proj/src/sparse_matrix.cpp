#include "dirhom/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dirhom {
namespace {

Rational one_of(const FieldSpec& f) { return f.from_int(1); }

// row += coeff * other, both column-sorted.
SparseMatrix::Row axpy(const FieldSpec& f, const SparseMatrix::Row& row,
                       const Rational& coeff, const SparseMatrix::Row& other) {
    SparseMatrix::Row out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || other[j].first < row[i].first) {
            Rational v = f.mul(coeff, other[j].second);
            if (!FieldSpec::is_zero(v)) out.emplace_back(other[j].first, std::move(v));
            ++j;
        } else {
            Rational v = f.add(row[i].second, f.mul(coeff, other[j].second));
            if (!FieldSpec::is_zero(v)) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseMatrix::SparseMatrix(Index rows, Index cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(Index n, FieldSpec field) {
    SparseMatrix m(n, n, field);
    for (Index i = 0; i < n; ++i) m.set(i, i, field.from_int(1));
    return m;
}

void SparseMatrix::set(Index r, Index c, const Rational& value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeError("entry index out of range");
    Row& row = data_[static_cast<std::size_t>(r)];
    Rational v = field_.normalize(value);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, Index col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (FieldSpec::is_zero(v))
            row.erase(it);
        else
            it->second = std::move(v);
    } else if (!FieldSpec::is_zero(v)) {
        row.insert(it, Entry(c, std::move(v)));
    }
}

void SparseMatrix::add_to(Index r, Index c, const Rational& delta) {
    set(r, c, field_.add(at(r, c), delta));
}

Rational SparseMatrix::at(Index r, Index c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeError("entry index out of range");
    const Row& row = data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, Index col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

Index SparseMatrix::nonzero_count() const {
    Index n = 0;
    for (const Row& row : data_) n += static_cast<Index>(row.size());
    return n;
}

bool SparseMatrix::is_zero() const {
    for (const Row& row : data_)
        if (!row.empty()) return false;
    return true;
}

EchelonForm reduced_row_echelon(const SparseMatrix& m) {
    const FieldSpec& f = m.field();
    std::vector<SparseMatrix::Row> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (Index r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

    std::vector<Index> pivots;
    std::size_t next = 0;  // next pivot slot
    for (Index c = 0; c < m.cols() && next < rows.size(); ++c) {
        // Rows at or below `next` have all entries in columns >= c, so a
        // nonzero in column c is the leading entry. Pick the sparsest
        // candidate to limit fill (Markowitz-style); ties go to the lowest
        // row so the scan is deterministic.
        std::size_t best = rows.size();
        for (std::size_t i = next; i < rows.size(); ++i) {
            if (!rows[i].empty() && rows[i].front().first == c &&
                (best == rows.size() || rows[i].size() < rows[best].size()))
                best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[next], rows[best]);

        Rational inv = f.div(one_of(f), rows[next].front().second);
        if (!(inv == one_of(f)))
            for (auto& e : rows[next]) e.second = f.mul(e.second, inv);

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next) continue;
            const SparseMatrix::Row& row = rows[i];
            const Rational* coeff = nullptr;
            if (i > next) {
                if (!row.empty() && row.front().first == c) coeff = &row.front().second;
            } else {
                auto it = std::lower_bound(
                    row.begin(), row.end(), c,
                    [](const SparseMatrix::Entry& e, Index col) { return e.first < col; });
                if (it != row.end() && it->first == c) coeff = &it->second;
            }
            if (coeff) rows[i] = axpy(f, row, f.neg(*coeff), rows[next]);
        }
        pivots.push_back(c);
        ++next;
    }

    SparseMatrix out(m.rows(), m.cols(), f);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) out.set(static_cast<Index>(i), c, v);
    return EchelonForm{std::move(out), std::move(pivots)};
}

Index rank(const SparseMatrix& m) { return reduced_row_echelon(m).rank(); }

SparseMatrix null_space(const SparseMatrix& m) {
    EchelonForm ech = reduced_row_echelon(m);
    const std::vector<Index>& pivots = ech.pivot_columns;

    std::vector<Index> free_cols;
    free_cols.reserve(static_cast<std::size_t>(m.cols() - ech.rank()));
    {
        std::size_t pi = 0;
        for (Index c = 0; c < m.cols(); ++c) {
            if (pi < pivots.size() && pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    std::vector<Index> kernel_col_of(static_cast<std::size_t>(m.cols()), -1);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        kernel_col_of[static_cast<std::size_t>(free_cols[k])] = static_cast<Index>(k);

    const FieldSpec& f = m.field();
    SparseMatrix basis(m.cols(), static_cast<Index>(free_cols.size()), f);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        basis.set(free_cols[k], static_cast<Index>(k), f.from_int(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (const auto& [c, v] : ech.matrix.row(static_cast<Index>(i))) {
            Index k = kernel_col_of[static_cast<std::size_t>(c)];
            if (k >= 0) basis.set(pivots[i], k, f.neg(v));
        }
    }
    return basis;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    if (!(a.field() == b.field())) throw FieldError("multiply: operands over different fields");

    const FieldSpec& f = a.field();
    SparseMatrix out(a.rows(), b.cols(), f);
    for (Index i = 0; i < a.rows(); ++i) {
        std::map<Index, Rational> acc;
        for (const auto& [k, av] : a.row(i))
            for (const auto& [j, bv] : b.row(k)) {
                auto [it, inserted] = acc.emplace(j, f.mul(av, bv));
                if (!inserted) it->second = f.add(it->second, f.mul(av, bv));
            }
        for (const auto& [j, v] : acc)
            if (!FieldSpec::is_zero(v)) out.set(i, j, v);
    }
    return out;
}

}  // namespace dirhom
