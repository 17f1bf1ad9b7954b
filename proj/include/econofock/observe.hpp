// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "econofock/evolve.hpp"
#include "econofock/sparse.hpp"
#include "econofock/states.hpp"

namespace econofock {

/// Reduced state of a subsystem: hermitian, unit trace, positive within
/// numerical tolerance.
struct DensityMatrix {
    std::size_t dim = 0;
    std::vector<cplx> entries;  // row-major
    BasisTag tag;

    cplx at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

/// Bipartition of the state's modes (Fock) or qubits (register) given by the
/// positions of subsystem A; subsystem B is the complement. Both sides must be
/// nonempty.
struct Partition {
    std::vector<std::size_t> a_positions;
};

/// The money modes versus the debt modes.
Partition money_vs_debt(const FockBasis& basis);

/// The named qubits versus the rest of the register.
Partition qubit_partition(const QubitRegister& reg,
                          std::span<const std::string> a_labels);

/// <psi|A|psi>; real to 1e-12 when A is hermitian.
cplx expectation(const SparseOperator& op, const StateVector& psi);

/// Real part of the expectation, for hermitian observables.
double expectation_real(const SparseOperator& op, const StateVector& psi);

/// Partial trace over subsystem B. For Fock states the occupation tensor
/// factorization follows the global mode order with Jordan-Wigner reordering
/// signs; expectation values of bilinears supported on one side are exact.
DensityMatrix reduced_density(const StateVector& psi, const Partition& part);

/// Von Neumann entropy in nats: -sum lambda ln lambda, with 0 ln 0 = 0.
double entropy(const DensityMatrix& rho);

/// S(rho_A) + S(rho_B) - S(rho_AB); equals 2 S(rho_A) for the pure inputs
/// this takes. Nonnegative.
double mutual_information(const StateVector& psi, const Partition& part);

/// Frobenius distance || rho_AB - rho_A x rho_B ||_F: zero exactly on product
/// states, positive whenever the joint state is not a product.
double separability_gap(const StateVector& psi, const Partition& part);

/// <N_money - N_debt>; the conserved imbalance of balanced credit creation.
double charge(const StateVector& psi);

/// Branch-weighted count of formed money-debt pairs:
/// sum over basis states of |amplitude|^2 min(N_money, N_debt).
double exciton_count(const StateVector& psi);

/// Named real-valued observables sampled along a trajectory. Evaluators
/// receive the node time so time-dependent energies can be recorded.
struct ObservableSet {
    std::vector<std::string> names;
    std::vector<std::function<double(double, const StateVector&)>> evaluators;
};

struct TimeSeries {
    std::vector<std::string> names;
    std::vector<double> times;
    std::vector<std::vector<double>> rows;  // one row per grid node
};

/// Evaluate every observable at every node of a stored trajectory
/// (n_steps + 1 states, inclusive endpoints).
TimeSeries record_series(const TimeGrid& grid, const ObservableSet& observables,
                         std::span<const StateVector> trajectory);

}  // namespace econofock
