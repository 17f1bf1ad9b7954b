// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace econofock {

namespace {

void require_same_space(const SparseOperator& a, const SparseOperator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(errc::basis_mismatch, "operator shapes differ: " + std::to_string(a.rows()) +
                                       "x" + std::to_string(a.cols()) + " vs " +
                                       std::to_string(b.rows()) + "x" +
                                       std::to_string(b.cols()));
    }
    if (!(a.row_tag() == b.row_tag()) || !(a.col_tag() == b.col_tag())) {
        fail(errc::basis_mismatch, "operators act on different bases: " +
                                       tag_description(a.row_tag()) + " vs " +
                                       tag_description(b.row_tag()));
    }
}

}  // namespace

SparseOperator SparseOperator::from_triplets(std::size_t rows, std::size_t cols,
                                             BasisTag row_tag, BasisTag col_tag,
                                             std::vector<Triplet> entries) {
    for (const Triplet& t : entries) {
        if (t.row >= rows || t.col >= cols) {
            fail(errc::index_out_of_range,
                 "triplet (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                     ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseOperator op;
    op.rows_ = rows;
    op.cols_ = cols;
    op.row_tag_ = std::move(row_tag);
    op.col_tag_ = std::move(col_tag);
    op.row_ptr_.assign(rows + 1, 0);

    // Merge duplicates, drop exact zeros.
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i + 1;
        cplx sum = entries[i].value;
        while (j < entries.size() && entries[j].row == entries[i].row &&
               entries[j].col == entries[i].col) {
            sum += entries[j].value;
            ++j;
        }
        if (sum != cplx{0.0, 0.0}) {
            op.col_.push_back(entries[i].col);
            op.val_.push_back(sum);
            ++op.row_ptr_[entries[i].row + 1];
        }
        i = j;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        op.row_ptr_[r + 1] += op.row_ptr_[r];
    }
    return op;
}

SparseOperator SparseOperator::zero(std::size_t dim, BasisTag tag) {
    return from_triplets(dim, dim, tag, tag, {});
}

SparseOperator SparseOperator::identity(std::size_t dim, BasisTag tag) {
    std::vector<Triplet> entries;
    entries.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        entries.push_back({i, i, cplx{1.0, 0.0}});
    }
    return from_triplets(dim, dim, tag, tag, std::move(entries));
}

std::size_t SparseOperator::dim() const {
    if (rows_ != cols_) {
        fail(errc::dimension_mismatch, "operator is rectangular (" + std::to_string(rows_) +
                                           "x" + std::to_string(cols_) + ")");
    }
    return rows_;
}

cplx SparseOperator::entry(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) {
        fail(errc::index_out_of_range, "entry index out of range");
    }
    const auto begin = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
    const auto end = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
    const auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) return {0.0, 0.0};
    return val_[static_cast<std::size_t>(it - col_.begin())];
}

double SparseOperator::inf_norm() const {
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double sum = 0.0;
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            sum += std::abs(val_[k]);
        }
        best = std::max(best, sum);
    }
    return best;
}

bool SparseOperator::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    return max_abs_diff(*this, this->adjoint()) <= tol;
}

SparseOperator SparseOperator::adjoint() const {
    std::vector<Triplet> entries;
    entries.reserve(val_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            entries.push_back({col_[k], r, std::conj(val_[k])});
        }
    }
    return from_triplets(cols_, rows_, col_tag_, row_tag_, std::move(entries));
}

std::vector<cplx> SparseOperator::apply(std::span<const cplx> x) const {
    if (x.size() != cols_) {
        fail(errc::dimension_mismatch, "vector length " + std::to_string(x.size()) +
                                           " does not match " + std::to_string(cols_) +
                                           " columns");
    }
    std::vector<cplx> y(rows_);
    kernels::spmv(row_ptr_, col_, val_, x, y);
    return y;
}

std::vector<cplx> SparseOperator::to_dense() const {
    std::vector<cplx> dense(rows_ * cols_, cplx{0.0, 0.0});
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            dense[r * cols_ + col_[k]] = val_[k];
        }
    }
    return dense;
}

SparseOperator add(const SparseOperator& a, const SparseOperator& b) {
    require_same_space(a, b);
    std::vector<Triplet> entries;
    entries.reserve(a.nonzeros() + b.nonzeros());
    for (const SparseOperator* op : {&a, &b}) {
        const auto row_ptr = op->row_ptr();
        const auto col = op->col_idx();
        const auto val = op->values();
        for (std::size_t r = 0; r < op->rows(); ++r) {
            for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
                entries.push_back({r, col[k], val[k]});
            }
        }
    }
    return SparseOperator::from_triplets(a.rows(), a.cols(), a.row_tag(), a.col_tag(),
                                         std::move(entries));
}

SparseOperator subtract(const SparseOperator& a, const SparseOperator& b) {
    return add(a, scale(cplx{-1.0, 0.0}, b));
}

SparseOperator scale(cplx factor, const SparseOperator& a) {
    std::vector<Triplet> entries;
    entries.reserve(a.nonzeros());
    const auto row_ptr = a.row_ptr();
    const auto col = a.col_idx();
    const auto val = a.values();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            entries.push_back({r, col[k], factor * val[k]});
        }
    }
    return SparseOperator::from_triplets(a.rows(), a.cols(), a.row_tag(), a.col_tag(),
                                         std::move(entries));
}

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b) {
    if (a.cols() != b.rows() || !(a.col_tag() == b.row_tag())) {
        fail(errc::basis_mismatch,
             "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                 " on " + tag_description(a.col_tag()) + " by " + std::to_string(b.rows()) +
                 "x" + std::to_string(b.cols()) + " on " + tag_description(b.row_tag()));
    }
    const auto a_row_ptr = a.row_ptr();
    const auto a_col = a.col_idx();
    const auto a_val = a.values();
    const auto b_row_ptr = b.row_ptr();
    const auto b_col = b.col_idx();
    const auto b_val = b.values();

    std::vector<Triplet> entries;
    std::vector<cplx> accum(b.cols(), cplx{0.0, 0.0});
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        touched.clear();
        for (std::size_t ka = a_row_ptr[r]; ka < a_row_ptr[r + 1]; ++ka) {
            const std::size_t mid = a_col[ka];
            const cplx av = a_val[ka];
            for (std::size_t kb = b_row_ptr[mid]; kb < b_row_ptr[mid + 1]; ++kb) {
                const std::size_t c = b_col[kb];
                if (accum[c] == cplx{0.0, 0.0}) touched.push_back(c);
                accum[c] += av * b_val[kb];
            }
        }
        for (std::size_t c : touched) {
            entries.push_back({r, c, accum[c]});
            accum[c] = {0.0, 0.0};
        }
    }
    return SparseOperator::from_triplets(a.rows(), b.cols(), a.row_tag(), b.col_tag(),
                                         std::move(entries));
}

SparseOperator adjoint(const SparseOperator& a) { return a.adjoint(); }

SparseOperator plus_hermitian_conjugate(const SparseOperator& a) {
    return add(a, a.adjoint());
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
    require_same_space(a, b);
    const SparseOperator diff = subtract(a, b);
    double best = 0.0;
    for (const cplx& v : diff.values()) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

}  // namespace econofock
