// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <span>

#include "econofock/sparse.hpp"
#include "econofock/states.hpp"

namespace econofock {

/// Uniform time axis with inclusive endpoints: node i sits at
/// t_start + i * dt for i in [0, n_steps].
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    std::size_t n_steps = 0;

    double dt() const { return (t_end - t_start) / static_cast<double>(n_steps); }
    double time_at(std::size_t node) const {
        return t_start + static_cast<double>(node) * dt();
    }
    void validate() const;
};

/// Supplies the time-dependent part of the Hamiltonian at a given time.
using PerturbationBuilder = std::function<SparseOperator(double)>;

/// Invoked at every grid node, including both endpoints.
using StepObserver = std::function<void(std::size_t node, double t, const StateVector&)>;

/// An instantaneous state transformation applied on arrival at a grid node
/// (after the step, before the node is observed). Used for repayment events.
struct Intervention {
    std::size_t node;
    std::function<StateVector(const StateVector&)> transform;
};

struct EvolutionReport {
    StateVector final_state;
    /// max |norm(psi) - 1| over all steps; never silently corrected.
    double norm_drift = 0.0;
};

/// psi(t) = exp(-i H t) psi0 through dense eigendecomposition. H must pass
/// the hermiticity predicate and have dimension at most 4096.
StateVector evolve_static(const SparseOperator& hamiltonian, const StateVector& psi0,
                          double t);

/// Midpoint-exponential stepping for H(t) = static_part + perturbation(t):
/// psi_{n+1} = exp(-i H(t_n + dt/2) dt) psi_n, with the per-step exponential
/// applied to machine precision by a scaled Taylor expansion of sparse
/// matrix-vector products. Norm drift is recorded, never repaired; drift
/// beyond 1e-6 aborts with StepNormDrift (the step size is too coarse).
EvolutionReport evolve_scheduled(const SparseOperator& static_part,
                                 const PerturbationBuilder& perturbation,
                                 const StateVector& psi0, const TimeGrid& grid,
                                 const StepObserver& observer = {},
                                 std::span<const Intervention> interventions = {});

/// x <- exp(-i H scale) x for hermitian sparse H.
void apply_exponential(const SparseOperator& hamiltonian, double scale,
                       std::vector<cplx>& x);

}  // namespace econofock
