// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "econofock/errors.hpp"
#include "econofock/fock.hpp"
#include "econofock/kernels.hpp"

namespace econofock {

/// One (row, col, value) entry used to assemble a sparse operator.
struct Triplet {
    std::size_t row;
    std::size_t col;
    cplx value;
};

/// Complex sparse matrix in canonical CSR form (rows sorted, columns sorted
/// within each row, duplicates merged, exact zeros dropped), carrying the
/// identity of the basis it acts on. Square operators have row_tag == col_tag;
/// sector-mapping variants of the ladder operators are rectangular.
class SparseOperator {
public:
    static SparseOperator from_triplets(std::size_t rows, std::size_t cols,
                                        BasisTag row_tag, BasisTag col_tag,
                                        std::vector<Triplet> entries);

    static SparseOperator zero(std::size_t dim, BasisTag tag);
    static SparseOperator identity(std::size_t dim, BasisTag tag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Matrix dimension for square operators.
    std::size_t dim() const;

    const BasisTag& row_tag() const { return row_tag_; }
    const BasisTag& col_tag() const { return col_tag_; }

    std::size_t nonzeros() const { return val_.size(); }

    std::span<const std::size_t> row_ptr() const { return row_ptr_; }
    std::span<const std::size_t> col_idx() const { return col_; }
    std::span<const cplx> values() const { return val_; }

    cplx entry(std::size_t row, std::size_t col) const;

    /// Max row sum of absolute values (the induced infinity norm).
    double inf_norm() const;

    /// Largest absolute entry of (*this - adjoint) is at most `tol`.
    bool is_hermitian(double tol = 1e-12) const;

    SparseOperator adjoint() const;

    std::vector<cplx> apply(std::span<const cplx> x) const;

    std::vector<cplx> to_dense() const;  // row-major, rows x cols

private:
    SparseOperator() = default;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    BasisTag row_tag_;
    BasisTag col_tag_;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> col_;
    std::vector<cplx> val_;
};

SparseOperator add(const SparseOperator& a, const SparseOperator& b);
SparseOperator subtract(const SparseOperator& a, const SparseOperator& b);
SparseOperator scale(cplx factor, const SparseOperator& a);
SparseOperator multiply(const SparseOperator& a, const SparseOperator& b);
SparseOperator adjoint(const SparseOperator& a);

/// a + adjoint(a): the explicit "+ h.c." assembly used by the pairing terms.
SparseOperator plus_hermitian_conjugate(const SparseOperator& a);

/// Largest absolute entrywise difference; operators must share shape and tags.
double max_abs_diff(const SparseOperator& a, const SparseOperator& b);

}  // namespace econofock
