// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "econofock/eigh.hpp"
#include "econofock/errors.hpp"

using namespace econofock;

namespace {

// Deterministic pseudo-random hermitian matrix.
std::vector<cplx> random_hermitian(std::size_t n, std::uint64_t seed) {
    std::uint64_t state = seed;
    const auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
    };
    std::vector<cplx> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = cplx{next(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v{next(), next()};
            a[i * n + j] = v;
            a[j * n + i] = std::conj(v);
        }
    }
    return a;
}

}  // namespace

TEST_CASE("eigh reproduces the Pauli spectra") {
    const std::vector<cplx> sx = {cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}};
    const EighResult rx = eigh(sx, 2);
    CHECK(rx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(rx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<cplx> sy = {cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}};
    const EighResult ry = eigh(sy, 2);
    CHECK(ry.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ry.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigh satisfies the eigenpair residual and orthonormality") {
    for (const std::size_t n : {2u, 5u, 16u, 33u}) {
        const std::vector<cplx> a = random_hermitian(n, 0x9e3779b97f4a7c15ULL + n);
        const EighResult result = eigh(a, n);

        for (std::size_t j = 1; j < n; ++j) {
            CHECK(result.eigenvalues[j - 1] <= result.eigenvalues[j]);
        }
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i].real();
        double eig_sum = 0.0;
        for (double v : result.eigenvalues) eig_sum += v;
        CHECK(trace == doctest::Approx(eig_sum).epsilon(1e-10));

        for (std::size_t j = 0; j < n; ++j) {
            const cplx* v = result.vector(j);
            double residual = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cplx av{0.0, 0.0};
                for (std::size_t k = 0; k < n; ++k) av += a[i * n + k] * v[k];
                residual = std::max(residual,
                                    std::abs(av - result.eigenvalues[j] * v[i]));
            }
            CHECK(residual < 1e-10);
            for (std::size_t k = 0; k <= j; ++k) {
                cplx overlap{0.0, 0.0};
                const cplx* w = result.vector(k);
                for (std::size_t i = 0; i < n; ++i) overlap += std::conj(w[i]) * v[i];
                if (k == j) {
                    CHECK(std::abs(overlap - cplx{1.0, 0.0}) < 1e-10);
                } else {
                    CHECK(std::abs(overlap) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("eigh handles fully degenerate spectra") {
    std::vector<cplx> identity(9, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < 3; ++i) identity[i * 3 + i] = 1.0;
    const EighResult result = eigh(identity, 3);
    for (double v : result.eigenvalues) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("eigh enforces the dense dimension cap") {
    try {
        eigh(std::vector<cplx>(1), 5000);
        FAIL("expected DimensionTooLargeForDense");
    } catch (const Error& e) {
        CHECK(e.code() == errc::dimension_too_large_for_dense);
    }
}

TEST_CASE("tridiag_lowest matches the discrete Laplacian spectrum") {
    const std::size_t n = 64;
    const std::vector<double> d(n, 2.0);
    const std::vector<double> e(n - 1, -1.0);
    const TridiagResult result = tridiag_lowest(d, e, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        const double exact =
            2.0 - 2.0 * std::cos(std::numbers::pi * static_cast<double>(j + 1) /
                                 static_cast<double>(n + 1));
        CHECK(result.eigenvalues[j] == doctest::Approx(exact).epsilon(1e-11));

        // Residual of the eigenpair.
        const auto& v = result.vectors[j];
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double av = d[i] * v[i];
            if (i > 0) av += e[i - 1] * v[i - 1];
            if (i + 1 < n) av += e[i] * v[i + 1];
            residual = std::max(residual, std::abs(av - result.eigenvalues[j] * v[i]));
        }
        CHECK(residual < 1e-9);
    }
}

TEST_CASE("tridiag_lowest of a 2x2 block") {
    const TridiagResult result = tridiag_lowest({0.0, 0.0}, {1.0}, 2);
    CHECK(result.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(result.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(std::abs(result.vectors[0][0]) - r) < 1e-10);
    CHECK(std::abs(std::abs(result.vectors[0][1]) - r) < 1e-10);
}

TEST_CASE("tridiag_lowest separates degenerate decoupled blocks") {
    // Zero off-diagonals decouple the matrix; the repeated eigenvalue still
    // needs an orthonormal pair of eigenvectors.
    const TridiagResult result = tridiag_lowest({1.0, 1.0, 2.0}, {0.0, 0.0}, 3);
    CHECK(result.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-12));
    double overlap = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        overlap += result.vectors[0][i] * result.vectors[1][i];
        norm_a += result.vectors[0][i] * result.vectors[0][i];
        norm_b += result.vectors[1][i] * result.vectors[1][i];
    }
    CHECK(std::abs(overlap) < 1e-8);
    CHECK(norm_a == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(norm_b == doctest::Approx(1.0).epsilon(1e-10));
}
