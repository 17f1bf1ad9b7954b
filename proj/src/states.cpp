// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/states.hpp"

#include <cmath>
#include <random>

namespace econofock {

StateVector StateVector::normalized(std::vector<cplx> amplitudes, BasisTag tag) {
    StateVector psi{std::move(amplitudes), std::move(tag)};
    const double n = psi.norm();
    if (n < 1e-12) {
        fail(errc::not_normalized, "cannot normalize a (numerically) zero vector");
    }
    for (cplx& a : psi.amplitudes) a /= n;
    return psi;
}

void fix_global_phase(StateVector& psi) {
    for (const cplx& a : psi.amplitudes) {
        if (std::abs(a) > 1e-14) {
            const cplx phase = a / std::abs(a);
            for (cplx& x : psi.amplitudes) x /= phase;
            return;
        }
    }
}

StateVector vacuum(const FockBasis& basis) {
    const OccupationState empty{0, basis.total_modes()};
    const auto index = basis.try_index_of(empty);
    if (!index) {
        fail(errc::vacuum_not_in_sector,
             "sector Q=" + std::to_string(*basis.sector()) + " excludes the vacuum");
    }
    std::vector<cplx> amplitudes(basis.dim(), cplx{0.0, 0.0});
    amplitudes[*index] = 1.0;
    return {std::move(amplitudes), basis.tag()};
}

StateVector basis_state(const FockBasis& basis, const OccupationState& occ) {
    std::vector<cplx> amplitudes(basis.dim(), cplx{0.0, 0.0});
    amplitudes[basis.index_of(occ)] = 1.0;
    return {std::move(amplitudes), basis.tag()};
}

StateVector qe_pair(const FockBasis& basis, std::size_t money_k, std::size_t debt_q) {
    const SparseOperator pair = pair_creation(basis, money_k, debt_q);
    StateVector psi = StateVector::normalized(pair.apply(vacuum(basis).amplitudes),
                                              basis.tag());
    fix_global_phase(psi);
    return psi;
}

StateVector loan_pair(const FockBasis& basis, std::size_t money_k, std::size_t debt_q) {
    return qe_pair(basis, money_k, debt_q);
}

StateVector asset_superposition(const SuperpositionSpec& spec) {
    const double weight = std::norm(spec.a) + std::norm(spec.b);
    if (std::abs(weight - 1.0) > 1e-9) {
        fail(errc::not_normalized,
             "|a|^2 + |b|^2 = " + std::to_string(weight) + " deviates from 1");
    }
    const QubitRegister reg({"asset"});
    StateVector psi{{spec.a, spec.b}, BasisTag{reg.tag()}};
    const double n = psi.norm();
    for (cplx& x : psi.amplitudes) x /= n;
    return psi;
}

std::vector<std::string> bell_qe_labels() {
    return {"money_valuation", "bond_valuation"};
}

StateVector bell_qe() {
    const QubitRegister reg(bell_qe_labels());
    const double r = 1.0 / std::sqrt(2.0);
    // Basis order (up,up), (up,down), (down,up), (down,down).
    return {{cplx{0.0, 0.0}, cplx{r, 0.0}, cplx{r, 0.0}, cplx{0.0, 0.0}},
            BasisTag{reg.tag()}};
}

StateVector register_state(const QubitRegister& reg, const std::string& pattern) {
    if (pattern.size() != reg.size()) {
        fail(errc::unknown_label, "pattern length " + std::to_string(pattern.size()) +
                                      " does not match register size " +
                                      std::to_string(reg.size()));
    }
    std::size_t index = 0;
    for (char c : pattern) {
        if (c != 'u' && c != 'd') {
            fail(errc::unknown_label, "register pattern may contain only 'u' and 'd'");
        }
        index = (index << 1) | static_cast<std::size_t>(c == 'd');
    }
    std::vector<cplx> amplitudes(reg.dim(), cplx{0.0, 0.0});
    amplitudes[index] = 1.0;
    return {std::move(amplitudes), BasisTag{reg.tag()}};
}

MeasurementOutcome measure(const StateVector& psi,
                           std::span<const SparseOperator> projectors,
                           std::uint64_t seed) {
    if (projectors.empty()) {
        fail(errc::incomplete_projectors, "no projectors supplied");
    }
    for (const SparseOperator& p : projectors) {
        if (p.rows() != psi.dim() || p.cols() != psi.dim() ||
            !(p.row_tag() == psi.tag)) {
            fail(errc::basis_mismatch, "projector does not act on the state's basis");
        }
    }
    SparseOperator sum = projectors[0];
    for (std::size_t i = 1; i < projectors.size(); ++i) {
        sum = add(sum, projectors[i]);
    }
    if (max_abs_diff(sum, SparseOperator::identity(psi.dim(), psi.tag)) > 1e-10) {
        fail(errc::incomplete_projectors, "projectors do not sum to the identity");
    }
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            const SparseOperator prod = multiply(projectors[i], projectors[j]);
            double worst = 0.0;
            for (const cplx& v : prod.values()) worst = std::max(worst, std::abs(v));
            if (worst > 1e-10) {
                fail(errc::incomplete_projectors,
                     "projectors " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not orthogonal");
            }
        }
    }

    std::vector<std::vector<cplx>> branches(projectors.size());
    std::vector<double> probs(projectors.size());
    double total = 0.0;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        branches[i] = projectors[i].apply(psi.amplitudes);
        const double branch_norm = kernels::norm2(branches[i]);
        probs[i] = branch_norm * branch_norm;
        total += probs[i];
    }

    std::mt19937_64 engine(seed);
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;

    std::size_t outcome = projectors.size() - 1;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        cumulative += probs[i] / total;
        if (u < cumulative) {
            outcome = i;
            break;
        }
    }

    const double branch_norm = kernels::norm2(branches[outcome]);
    if (branch_norm * branch_norm < 1e-24) {
        fail(errc::zero_probability_collapse,
             "selected branch has numerically zero probability");
    }
    std::vector<cplx> collapsed = std::move(branches[outcome]);
    for (cplx& x : collapsed) x /= branch_norm;
    return {outcome, StateVector{std::move(collapsed), psi.tag}};
}

}  // namespace econofock
