// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace econofock {

using cplx = std::complex<double>;

// Data-parallel numeric kernels. Each kernel exists twice: a serial reference
// under kernels::serial and an OpenMP variant under kernels::omp. The
// unqualified entry points dispatch on problem size. Parallel variants split
// work by output element only, so every element is accumulated in the same
// order as the serial reference and results are bitwise identical for any
// thread count. Reductions (dot, norm) stay serial for the same reason.
namespace kernels {

/// Below this many scalar multiply-adds the dispatch stays serial.
inline constexpr std::size_t parallel_grain = 1u << 15;

namespace serial {

/// y = A x for a CSR matrix with `rows` rows.
void spmv(std::span<const std::size_t> row_ptr, std::span<const std::size_t> col,
          std::span<const cplx> val, std::span<const cplx> x, std::span<cplx> y);

/// y = A x for a row-major dense matrix.
void dense_matvec(std::span<const cplx> a, std::size_t rows, std::size_t cols,
                  std::span<const cplx> x, std::span<cplx> y);

/// y += alpha * x
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

}  // namespace serial

namespace omp {

void spmv(std::span<const std::size_t> row_ptr, std::span<const std::size_t> col,
          std::span<const cplx> val, std::span<const cplx> x, std::span<cplx> y);

void dense_matvec(std::span<const cplx> a, std::size_t rows, std::size_t cols,
                  std::span<const cplx> x, std::span<cplx> y);

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

}  // namespace omp

void spmv(std::span<const std::size_t> row_ptr, std::span<const std::size_t> col,
          std::span<const cplx> val, std::span<const cplx> x, std::span<cplx> y);

void dense_matvec(std::span<const cplx> a, std::size_t rows, std::size_t cols,
                  std::span<const cplx> x, std::span<cplx> y);

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

/// <x|y> with the left argument conjugated. Always serial.
cplx dot(std::span<const cplx> x, std::span<const cplx> y);

/// Euclidean norm. Always serial.
double norm2(std::span<const cplx> x);

/// True when the build has OpenMP enabled.
bool openmp_enabled() noexcept;

}  // namespace kernels
}  // namespace econofock
