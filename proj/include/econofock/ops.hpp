// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "econofock/fock.hpp"
#include "econofock/sparse.hpp"

namespace econofock {

/// Labeled register of valuation qubits. Qubit 0 (the first label) is the most
/// significant bit of the basis index; spin up is 0, spin down is 1.
class QubitRegister {
public:
    explicit QubitRegister(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    std::size_t dim() const { return std::size_t{1} << labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    QubitTag tag() const { return {labels_}; }

    /// Position of a label in the register; throws UnknownLabel.
    std::size_t position(const std::string& label) const;

    /// True when the basis state `index` has the labeled qubit spin-down.
    bool is_down(std::size_t index, std::size_t position) const {
        return (index >> (labels_.size() - 1 - position)) & 1u;
    }

private:
    std::vector<std::string> labels_;
};

// Fermionic ladder operators with exact Jordan-Wigner signs over the global
// money-then-debt mode order. Basis states are ordered products of creation
// operators with mode 0 leftmost, so acting at mode m picks up a factor
// (-1)^(number of occupied modes strictly below m).

SparseOperator creation(const FockBasis& basis, ModeId mode);
SparseOperator annihilation(const FockBasis& basis, ModeId mode);

/// Sector-mapping variants: rectangular matrices from a source sector basis to
/// the target sector basis one charge step away.
SparseOperator creation(const FockBasis& source, const FockBasis& target, ModeId mode);
SparseOperator annihilation(const FockBasis& source, const FockBasis& target, ModeId mode);

/// Diagonal occupation-number operator; equals creation * annihilation.
SparseOperator number(const FockBasis& basis, ModeId mode);

/// Correlated money-debt creation: debt mode q is created after money mode k,
/// so the amplitude composes both Jordan-Wigner signs.
SparseOperator pair_creation(const FockBasis& basis, std::size_t money_k,
                             std::size_t debt_q);

/// Fermionic swap of the occupancies of two distinct modes. Involution; the
/// single-particle transfer across an empty interval has amplitude +1, the
/// doubly occupied configuration picks up -1.
SparseOperator exchange(const FockBasis& basis, ModeId i, ModeId j);

/// Pauli-X on the labeled qubit, identity elsewhere.
SparseOperator sigma_x(const QubitRegister& reg, const std::string& target);

/// Projector onto spin-up (or spin-down) of the labeled qubit.
SparseOperator qubit_projector(const QubitRegister& reg, const std::string& target,
                               bool spin_up);

/// Total money (or debt) occupation summed over modes.
SparseOperator total_number(const FockBasis& basis, Species species);

/// Charge operator N_money - N_debt, conserved by every model Hamiltonian.
SparseOperator charge_operator(const FockBasis& basis);

}  // namespace econofock
