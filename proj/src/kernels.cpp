// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/kernels.hpp"

#include <cmath>

namespace econofock::kernels {

namespace serial {

void spmv(std::span<const std::size_t> row_ptr, std::span<const std::size_t> col,
          std::span<const cplx> val, std::span<const cplx> x, std::span<cplx> y) {
    const std::size_t rows = row_ptr.size() - 1;
    for (std::size_t i = 0; i < rows; ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            acc += val[k] * x[col[k]];
        }
        y[i] = acc;
    }
}

void dense_matvec(std::span<const cplx> a, std::size_t rows, std::size_t cols,
                  std::span<const cplx> x, std::span<cplx> y) {
    for (std::size_t i = 0; i < rows; ++i) {
        cplx acc{0.0, 0.0};
        const cplx* row = a.data() + i * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            acc += row[j] * x[j];
        }
        y[i] = acc;
    }
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

}  // namespace serial

namespace omp {

void spmv(std::span<const std::size_t> row_ptr, std::span<const std::size_t> col,
          std::span<const cplx> val, std::span<const cplx> x, std::span<cplx> y) {
    const std::int64_t rows = static_cast<std::int64_t>(row_ptr.size()) - 1;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
            acc += val[k] * x[col[k]];
        }
        y[i] = acc;
    }
}

void dense_matvec(std::span<const cplx> a, std::size_t rows, std::size_t cols,
                  std::span<const cplx> x, std::span<cplx> y) {
    const std::int64_t n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        cplx acc{0.0, 0.0};
        const cplx* row = a.data() + static_cast<std::size_t>(i) * cols;
        for (std::size_t j = 0; j < cols; ++j) {
            acc += row[j] * x[j];
        }
        y[i] = acc;
    }
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

}  // namespace omp

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

void spmv(std::span<const std::size_t> row_ptr, std::span<const std::size_t> col,
          std::span<const cplx> val, std::span<const cplx> x, std::span<cplx> y) {
#ifdef _OPENMP
    if (val.size() >= parallel_grain) {
        omp::spmv(row_ptr, col, val, x, y);
        return;
    }
#endif
    serial::spmv(row_ptr, col, val, x, y);
}

void dense_matvec(std::span<const cplx> a, std::size_t rows, std::size_t cols,
                  std::span<const cplx> x, std::span<cplx> y) {
#ifdef _OPENMP
    if (rows * cols >= parallel_grain) {
        omp::dense_matvec(a, rows, cols, x, y);
        return;
    }
#endif
    serial::dense_matvec(a, rows, cols, x, y);
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
#ifdef _OPENMP
    if (x.size() >= parallel_grain) {
        omp::axpy(alpha, x, y);
        return;
    }
#endif
    serial::axpy(alpha, x, y);
}

cplx dot(std::span<const cplx> x, std::span<const cplx> y) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

double norm2(std::span<const cplx> x) {
    double acc = 0.0;
    for (const cplx& v : x) {
        acc += std::norm(v);
    }
    return std::sqrt(acc);
}

}  // namespace econofock::kernels
