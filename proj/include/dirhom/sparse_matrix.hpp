#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dirhom/field.hpp"

namespace dirhom {

using Index = std::int64_t;

/**
 * Sparse matrix with exact entries over a FieldSpec. Rows are kept as
 * column-sorted vectors of nonzero entries; every mutation keeps entries
 * nonzero and canonical for the field, so equality is structural.
 */
class SparseMatrix {
public:
    using Entry = std::pair<Index, Rational>;  // (column, value)
    using Row = std::vector<Entry>;

    SparseMatrix(Index rows, Index cols, FieldSpec field);
    static SparseMatrix identity(Index n, FieldSpec field);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    void set(Index r, Index c, const Rational& value);
    void add_to(Index r, Index c, const Rational& delta);
    Rational at(Index r, Index c) const;

    const Row& row(Index r) const { return data_[static_cast<std::size_t>(r)]; }
    Index nonzero_count() const;
    bool is_zero() const;

    bool operator==(const SparseMatrix&) const = default;

private:
    Index rows_;
    Index cols_;
    FieldSpec field_;
    std::vector<Row> data_;
};

/** Unique reduced row echelon form together with its pivot columns. */
struct EchelonForm {
    SparseMatrix matrix;
    std::vector<Index> pivot_columns;  // ascending
    Index rank() const { return static_cast<Index>(pivot_columns.size()); }
};

EchelonForm reduced_row_echelon(const SparseMatrix& m);

Index rank(const SparseMatrix& m);

/**
 * Right kernel of m as a matrix whose columns form the canonical basis
 * derived from the reduced row echelon form: one column per free column f
 * (ascending), with a unit coordinate at f and back-substituted values at
 * the pivot coordinates. Identical inputs give identical results.
 */
SparseMatrix null_space(const SparseMatrix& m);

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace dirhom
