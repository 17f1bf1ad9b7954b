// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "econofock/fock.hpp"
#include "econofock/ops.hpp"
#include "econofock/sparse.hpp"

namespace econofock {

/// Name of the deterministic pseudo-random generator behind measure();
/// recorded in run metadata so outputs are reproducible by construction.
inline constexpr const char* measurement_generator = "mt19937_64";

/// Unit-norm complex amplitude vector tagged with the identity of its basis.
struct StateVector {
    std::vector<cplx> amplitudes;
    BasisTag tag;

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const { return kernels::norm2(amplitudes); }

    /// Normalizes (throwing NotNormalized on a zero vector) and returns the state.
    static StateVector normalized(std::vector<cplx> amplitudes, BasisTag tag);
};

/// Fix the global phase so the first nonzero amplitude is real positive.
void fix_global_phase(StateVector& psi);

/// The no-excitation reference state of the monetary field.
StateVector vacuum(const FockBasis& basis);

/// Unit amplitude on one occupation pattern.
StateVector basis_state(const FockBasis& basis, const OccupationState& occ);

/// Normalized pair_creation(k, q) applied to the vacuum: one unit of money
/// bound to one recorded debt, phase-fixed.
StateVector qe_pair(const FockBasis& basis, std::size_t money_k, std::size_t debt_q);

/// Same amplitudes as qe_pair; the mobile-money / confined-debt labeling is
/// carried by scenario reporting.
StateVector loan_pair(const FockBasis& basis, std::size_t money_k, std::size_t debt_q);

/// Amplitudes on the two basis states of a single valuation qubit.
struct SuperpositionSpec {
    cplx a;  // amplitude on |Money up>
    cplx b;  // amplitude on |Gold down>
};

/// a|Money up> + b|Gold down> on the 1-qubit register ["asset"].
StateVector asset_superposition(const SuperpositionSpec& spec);

/// The labels the Bell-type constructor uses, in register order.
std::vector<std::string> bell_qe_labels();

/// (|down,up> + |up,down>)/sqrt(2) on ["money_valuation", "bond_valuation"]:
/// anti-correlated valuations of currency and bond.
StateVector bell_qe();

/// Basis state of a register from a pattern of 'u' (up) and 'd' (down).
StateVector register_state(const QubitRegister& reg, const std::string& pattern);

struct MeasurementOutcome {
    std::size_t outcome;
    StateVector collapsed;
};

/// Projective measurement with a seeded deterministic generator. The
/// projector family must be complete (sum = identity within 1e-10) and
/// mutually orthogonal; identical (state, projectors, seed) triples give
/// identical outcomes.
MeasurementOutcome measure(const StateVector& psi,
                           std::span<const SparseOperator> projectors,
                           std::uint64_t seed);

}  // namespace econofock
