// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

// Timing comparison between the serial reference kernels and their OpenMP
// counterparts on the workloads the engine actually runs: sparse and dense
// matrix-vector products, and the Taylor-expanded propagator application.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <vector>

#include "econofock/evolve.hpp"
#include "econofock/kernels.hpp"
#include "econofock/sparse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace econofock;

namespace {

struct Xorshift {
    std::uint64_t state;
    double next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
    }
};

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
    Xorshift rng{seed};
    std::vector<cplx> v(n);
    for (cplx& x : v) x = cplx{rng.next(), rng.next()};
    return v;
}

struct Csr {
    std::vector<std::size_t> row_ptr, col;
    std::vector<cplx> val;
};

Csr banded_matrix(std::size_t n, std::size_t per_row, std::uint64_t seed) {
    Xorshift rng{seed};
    Csr m;
    m.row_ptr.push_back(0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < per_row; ++k) {
            m.col.push_back((i + k * 131) % n);
            m.val.push_back(cplx{rng.next(), rng.next()});
        }
        m.row_ptr.push_back(m.col.size());
    }
    return m;
}

double time_ms(const std::function<void()>& body, std::size_t repeats) {
    body();  // warm up
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t r = 0; r < repeats; ++r) body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() /
           static_cast<double>(repeats);
}

void report(const char* label, double serial_ms, double omp_ms) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", label, serial_ms, omp_ms,
                serial_ms / omp_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial path\n\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "omp", "speedup");

    for (const std::size_t n : {1u << 14, 1u << 17}) {
        const Csr m = banded_matrix(n, 8, 42 + n);
        const std::vector<cplx> x = random_vector(n, 7 + n);
        std::vector<cplx> y(n);
        char label[64];
        std::snprintf(label, sizeof(label), "spmv n=%zu nnz=%zu", n, m.val.size());
        report(label,
               time_ms([&] { kernels::serial::spmv(m.row_ptr, m.col, m.val, x, y); }, 20),
               time_ms([&] { kernels::omp::spmv(m.row_ptr, m.col, m.val, x, y); }, 20));
    }

    for (const std::size_t n : {512u, 2048u}) {
        const std::vector<cplx> a = random_vector(n * n, 3 + n);
        const std::vector<cplx> x = random_vector(n, 11 + n);
        std::vector<cplx> y(n);
        char label[64];
        std::snprintf(label, sizeof(label), "dense_matvec n=%zu", n);
        report(label,
               time_ms([&] { kernels::serial::dense_matvec(a, n, n, x, y); }, 50),
               time_ms([&] { kernels::omp::dense_matvec(a, n, n, x, y); }, 50));
    }

    {
        // Propagator application: a hermitian banded operator exponentiated
        // onto a state, the per-step workload of scheduled evolution.
        const std::size_t n = 1u << 15;
        const Csr raw = banded_matrix(n, 6, 99);
        std::vector<Triplet> triplets;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = raw.row_ptr[i]; k < raw.row_ptr[i + 1]; ++k) {
                triplets.push_back({i, raw.col[k], raw.val[k]});
                triplets.push_back({raw.col[k], i, std::conj(raw.val[k])});
            }
        }
        const FockTag tag{15, 0, {}};
        const SparseOperator h = SparseOperator::from_triplets(
            n, n, BasisTag{tag}, BasisTag{tag}, std::move(triplets));
        std::vector<cplx> psi = random_vector(n, 1);
        const double inv_norm = 1.0 / kernels::norm2(psi);
        for (cplx& v : psi) v *= inv_norm;

        std::vector<cplx> work = psi;
        const double serial_ms = time_ms(
            [&] {
                work = psi;
                apply_exponential(h, 0.01, work);
            },
            5);
        std::printf("%-28s %10.3f ms (dispatched; grain %zu)\n", "apply_exponential",
                    serial_ms, kernels::parallel_grain);
    }

    return 0;
}
