// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "econofock/eigh.hpp"

namespace econofock {

void TimeGrid::validate() const {
    if (!(t_end > t_start)) {
        fail(errc::dimension_mismatch, "time grid needs t_end > t_start");
    }
    if (n_steps < 1) {
        fail(errc::dimension_mismatch, "time grid needs n_steps >= 1");
    }
}

namespace {

constexpr double hermiticity_tol = 1e-12;

void require_evolvable(const SparseOperator& h, const StateVector& psi) {
    if (h.rows() != h.cols()) {
        fail(errc::dimension_mismatch, "Hamiltonian must be square");
    }
    if (!(h.row_tag() == psi.tag) || h.cols() != psi.dim()) {
        fail(errc::basis_mismatch, "Hamiltonian and state act on different bases");
    }
    if (!h.is_hermitian(hermiticity_tol)) {
        fail(errc::non_hermitian, "Hamiltonian fails the hermiticity predicate");
    }
}

}  // namespace

StateVector evolve_static(const SparseOperator& hamiltonian, const StateVector& psi0,
                          double t) {
    require_evolvable(hamiltonian, psi0);
    const std::size_t n = psi0.dim();
    if (n > max_dense_dim) {
        fail(errc::dimension_too_large_for_dense,
             "static evolution is exact-dense only; dimension " + std::to_string(n) +
                 " exceeds " + std::to_string(max_dense_dim));
    }

    const EighResult eig = eigh(hamiltonian.to_dense(), n);

    // psi(t) = V exp(-i Lambda t) V^dagger psi0
    std::vector<cplx> modal(n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        const cplx* v = eig.vector(j);
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            acc += std::conj(v[i]) * psi0.amplitudes[i];
        }
        modal[j] = acc * std::exp(cplx{0.0, -eig.eigenvalues[j] * t});
    }
    std::vector<cplx> out(n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        const cplx* v = eig.vector(j);
        kernels::axpy(modal[j], std::span<const cplx>(v, n), out);
    }
    return {std::move(out), psi0.tag};
}

void apply_exponential(const SparseOperator& hamiltonian, double scale,
                       std::vector<cplx>& x) {
    // Scale so the Taylor series of exp(-i H s) converges fast and without
    // cancellation, then square by repeated application.
    const double magnitude = hamiltonian.inf_norm() * std::abs(scale);
    std::size_t doublings = 0;
    while (magnitude / static_cast<double>(std::size_t{1} << doublings) > 1.0 &&
           doublings < 40) {
        ++doublings;
    }
    const std::size_t segments = std::size_t{1} << doublings;
    const double segment = scale / static_cast<double>(segments);

    std::vector<cplx> term(x.size());
    std::vector<cplx> next(x.size());
    for (std::size_t s = 0; s < segments; ++s) {
        term = x;
        for (std::size_t k = 1; k <= 64; ++k) {
            kernels::spmv(hamiltonian.row_ptr(), hamiltonian.col_idx(),
                          hamiltonian.values(), term, next);
            const cplx factor = cplx{0.0, -segment} / static_cast<double>(k);
            for (std::size_t i = 0; i < term.size(); ++i) {
                term[i] = factor * next[i];
            }
            kernels::axpy(cplx{1.0, 0.0}, term, x);
            if (kernels::norm2(term) < 1e-18 * std::max(1.0, kernels::norm2(x))) break;
        }
    }
}

EvolutionReport evolve_scheduled(const SparseOperator& static_part,
                                 const PerturbationBuilder& perturbation,
                                 const StateVector& psi0, const TimeGrid& grid,
                                 const StepObserver& observer,
                                 std::span<const Intervention> interventions) {
    grid.validate();
    require_evolvable(static_part, psi0);

    std::vector<const Intervention*> pending;
    for (const Intervention& iv : interventions) {
        if (iv.node > grid.n_steps) {
            fail(errc::index_out_of_range, "intervention node beyond the grid");
        }
        pending.push_back(&iv);
    }
    std::sort(pending.begin(), pending.end(),
              [](const Intervention* a, const Intervention* b) { return a->node < b->node; });

    const auto apply_interventions = [&](std::size_t node, StateVector& psi) {
        for (const Intervention* iv : pending) {
            if (iv->node == node) psi = iv->transform(psi);
        }
    };

    StateVector psi = psi0;
    double drift = 0.0;
    apply_interventions(0, psi);
    if (observer) observer(0, grid.time_at(0), psi);

    const double dt = grid.dt();
    for (std::size_t step = 0; step < grid.n_steps; ++step) {
        const double t_mid = grid.time_at(step) + 0.5 * dt;
        if (perturbation) {
            const SparseOperator v = perturbation(t_mid);
            const SparseOperator h = add(static_part, v);
            if (!h.is_hermitian(hermiticity_tol)) {
                fail(errc::non_hermitian,
                     "H(t) fails the hermiticity predicate at t = " + std::to_string(t_mid));
            }
            apply_exponential(h, dt, psi.amplitudes);
        } else {
            apply_exponential(static_part, dt, psi.amplitudes);
        }

        const double step_drift = std::abs(psi.norm() - 1.0);
        drift = std::max(drift, step_drift);
        if (step_drift > 1e-6) {
            fail(errc::step_norm_drift,
                 "norm drift " + std::to_string(step_drift) + " at step " +
                     std::to_string(step + 1) + "; reduce dt");
        }

        apply_interventions(step + 1, psi);
        if (observer) observer(step + 1, grid.time_at(step + 1), psi);
    }
    return {std::move(psi), drift};
}

}  // namespace econofock
