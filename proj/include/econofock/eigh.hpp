// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "econofock/kernels.hpp"

namespace econofock {

/// Largest dimension accepted for dense eigendecomposition work.
inline constexpr std::size_t max_dense_dim = 4096;

/// Spectral decomposition of a hermitian matrix. Eigenvalues ascend;
/// eigenvector j occupies vectors[j * dim .. j * dim + dim).
struct EighResult {
    std::size_t dim = 0;
    std::vector<double> eigenvalues;
    std::vector<cplx> vectors;

    const cplx* vector(std::size_t j) const { return vectors.data() + j * dim; }
};

/// Dense hermitian eigendecomposition of a row-major dim x dim matrix.
EighResult eigh(const std::vector<cplx>& dense_row_major, std::size_t dim,
                bool want_vectors = true);

/// The k lowest eigenpairs of a real symmetric tridiagonal matrix
/// (diag d[0..n), off-diagonal e[0..n-1)), via Sturm-sequence bisection and
/// inverse iteration. Eigenvectors are unit-norm and orthogonalized within
/// degenerate clusters.
struct TridiagResult {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> vectors;
};

TridiagResult tridiag_lowest(const std::vector<double>& d, const std::vector<double>& e,
                             std::size_t k, bool want_vectors = true);

}  // namespace econofock
