#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quiverhh/field.hpp"

namespace quiverhh {

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Sorts, merges duplicate indices, reduces into `field` and drops zeros.
SparseVector normalize(SparseVector terms, const Field& field);

/// x + factor * y, computed in `field`.
SparseVector axpy(const SparseVector& x, const Rational& factor, const SparseVector& y,
                  const Field& field);

/// Column-major sparse matrix over a field.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols, Field field);

    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows, Field field);
    static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns,
                                     Field field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }

    const SparseVector& column(std::size_t c) const { return columns_.at(c); }
    void set_column(std::size_t c, SparseVector entries);

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);

    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    SparseMatrix transpose() const;
    /// Row vectors, i.e. the columns of the transpose.
    std::vector<SparseVector> row_vectors() const;

    SparseVector apply(const SparseVector& x) const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    Field field_;
    std::vector<SparseVector> columns_;
};

struct EchelonForm {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    /// Row i has a leading 1 in pivot_columns[i] and zeros in every other pivot column.
    std::vector<SparseVector> reduced_rows;
};

/// Reduced row echelon form. The result is the unique RREF of the row space,
/// so it does not depend on elimination order.
EchelonForm rref(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Rank of the span of `vectors` (any common length).
std::size_t rank_of(const std::vector<SparseVector>& vectors, const Field& field);

struct KernelBasis {
    std::vector<SparseVector> vectors;
    /// vectors[j] has coordinate 1 at free_columns[j] and 0 at the other free
    /// columns, so the coordinates of a kernel element in this basis are its
    /// entries at the free columns.
    std::vector<std::size_t> free_columns;
};

KernelBasis kernel(const SparseMatrix& m);
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Some x with m * x == v exactly, or nullopt when v is not in the column span.
std::optional<SparseVector> solve_in_image(const SparseMatrix& m, const SparseVector& v);

} // namespace quiverhh
