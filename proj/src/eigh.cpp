// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/eigh.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "econofock/errors.hpp"

namespace econofock {

EighResult eigh(const std::vector<cplx>& dense_row_major, std::size_t dim,
                bool want_vectors) {
    if (dim > max_dense_dim) {
        fail(errc::dimension_too_large_for_dense,
             "dimension " + std::to_string(dim) + " exceeds the dense cap of " +
                 std::to_string(max_dense_dim));
    }
    if (dense_row_major.size() != dim * dim) {
        fail(errc::dimension_mismatch, "matrix storage does not match dimension");
    }

    Eigen::MatrixXcd a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                dense_row_major[i * dim + j];
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        a, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        fail(errc::invalid_density_matrix, "eigendecomposition did not converge");
    }

    EighResult result;
    result.dim = dim;
    result.eigenvalues.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        result.eigenvalues[j] = solver.eigenvalues()(static_cast<Eigen::Index>(j));
    }
    if (want_vectors) {
        result.vectors.resize(dim * dim);
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t i = 0; i < dim; ++i) {
                result.vectors[j * dim + i] = solver.eigenvectors()(
                    static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return result;
}

namespace {

/// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                        double x) {
    const std::size_t n = d.size();
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double off = i == 0 ? 0.0 : e[i - 1];
        q = d[i] - x - (i == 0 ? 0.0 : off * off / q);
        if (q == 0.0) q = 1e-300;  // nudge off the exact singularity
        if (q < 0.0) ++count;
    }
    return count;
}

/// Solve (T - lambda) x = rhs with partial pivoting; overwrites rhs.
void shifted_tridiag_solve(const std::vector<double>& d, const std::vector<double>& e,
                           double lambda, std::vector<double>& rhs) {
    const std::size_t n = d.size();
    std::vector<double> diag(n), upper1(n, 0.0), upper2(n, 0.0), lower(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) diag[i] = d[i] - lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        upper1[i] = e[i];
        lower[i + 1] = e[i];
    }
    // Forward elimination with row swaps; fill-in extends to a second upper band.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(lower[i + 1]) > std::abs(diag[i])) {
            std::swap(diag[i], lower[i + 1]);
            std::swap(upper1[i], diag[i + 1]);
            if (i + 2 < n) std::swap(upper2[i], upper1[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (diag[i] == 0.0) diag[i] = 1e-300;
        const double m = lower[i + 1] / diag[i];
        diag[i + 1] -= m * upper1[i];
        if (i + 2 < n) upper1[i + 1] -= m * upper2[i];
        rhs[i + 1] -= m * rhs[i];
    }
    if (diag[n - 1] == 0.0) diag[n - 1] = 1e-300;
    // Back substitution.
    for (std::size_t ip1 = n; ip1 > 0; --ip1) {
        const std::size_t i = ip1 - 1;
        double v = rhs[i];
        if (i + 1 < n) v -= upper1[i] * rhs[i + 1];
        if (i + 2 < n) v -= upper2[i] * rhs[i + 2];
        rhs[i] = v / diag[i];
    }
}

void normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (s > 0.0) {
        for (double& x : v) x /= s;
    }
}

}  // namespace

TridiagResult tridiag_lowest(const std::vector<double>& d, const std::vector<double>& e,
                             std::size_t k, bool want_vectors) {
    const std::size_t n = d.size();
    if (n == 0 || e.size() + 1 != n || k > n) {
        fail(errc::dimension_mismatch, "inconsistent tridiagonal problem");
    }

    // Gershgorin interval containing the whole spectrum.
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});

    TridiagResult result;
    result.eigenvalues.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        double a = lo, b = hi;
        while (b - a > 1e-15 * scale) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (sturm_count(d, e, mid) > j) {
                b = mid;
            } else {
                a = mid;
            }
        }
        result.eigenvalues[j] = 0.5 * (a + b);
    }

    if (!want_vectors) return result;

    result.vectors.assign(k, std::vector<double>(n));
    std::uint64_t rng_state = 0x2545F4914F6CDD1DULL;
    const auto next_unit = [&rng_state]() {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        return static_cast<double>(rng_state >> 11) * 0x1.0p-53 - 0.5;
    };

    std::size_t cluster_start = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (j > 0 &&
            result.eigenvalues[j] - result.eigenvalues[j - 1] > 1e-8 * scale) {
            cluster_start = j;
        }
        std::vector<double>& v = result.vectors[j];
        for (double& x : v) x = next_unit();
        normalize(v);
        for (int iter = 0; iter < 3; ++iter) {
            shifted_tridiag_solve(d, e, result.eigenvalues[j], v);
            // Project out earlier members of a degenerate cluster.
            for (std::size_t p = cluster_start; p < j; ++p) {
                double overlap = 0.0;
                for (std::size_t i = 0; i < n; ++i) overlap += result.vectors[p][i] * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= overlap * result.vectors[p][i];
            }
            normalize(v);
        }
        // Deterministic sign: largest-magnitude component positive.
        std::size_t arg = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
        }
        if (v[arg] < 0.0) {
            for (double& x : v) x = -x;
        }
    }
    return result;
}

}  // namespace econofock
