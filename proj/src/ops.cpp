// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/ops.hpp"

#include <algorithm>

namespace econofock {

namespace {

double jw_sign(const OccupationState& occ, std::size_t position) {
    return occ.occupied_below(position) % 2 == 0 ? 1.0 : -1.0;
}

void require_unrestricted(const FockBasis& basis, const char* what) {
    if (basis.sector()) {
        fail(errc::sector_mismatch,
             std::string(what) +
                 " leaves a sector-restricted basis; use the source/target variant");
    }
}

SparseOperator ladder(const FockBasis& source, const FockBasis& target, ModeId mode,
                      bool create) {
    const std::size_t p = source.position(mode);
    std::vector<Triplet> entries;
    entries.reserve(source.dim() / 2 + 1);
    for (std::size_t idx = 0; idx < source.dim(); ++idx) {
        const OccupationState occ = source.occupation_of(idx);
        if (occ.occupied(p) == create) continue;  // Pauli exclusion / nothing to destroy
        const OccupationState flipped = occ.with_bit(p, create);
        const auto out = target.try_index_of(flipped);
        if (!out) {
            fail(errc::sector_mismatch, "image state " + flipped.to_string() +
                                            " is not in the target basis");
        }
        entries.push_back({*out, idx, cplx{jw_sign(occ, p), 0.0}});
    }
    return SparseOperator::from_triplets(target.dim(), source.dim(), target.tag(),
                                         source.tag(), std::move(entries));
}

}  // namespace

QubitRegister::QubitRegister(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        fail(errc::unknown_label, "register needs at least one qubit label");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                fail(errc::unknown_label, "duplicate qubit label '" + labels_[i] + "'");
            }
        }
    }
}

std::size_t QubitRegister::position(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        fail(errc::unknown_label, "no qubit labeled '" + label + "' in this register");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

SparseOperator creation(const FockBasis& basis, ModeId mode) {
    require_unrestricted(basis, "creation");
    return ladder(basis, basis, mode, true);
}

SparseOperator annihilation(const FockBasis& basis, ModeId mode) {
    require_unrestricted(basis, "annihilation");
    return ladder(basis, basis, mode, false);
}

SparseOperator creation(const FockBasis& source, const FockBasis& target, ModeId mode) {
    return ladder(source, target, mode, true);
}

SparseOperator annihilation(const FockBasis& source, const FockBasis& target, ModeId mode) {
    return ladder(source, target, mode, false);
}

SparseOperator number(const FockBasis& basis, ModeId mode) {
    const std::size_t p = basis.position(mode);
    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        if (basis.occupation_of(idx).occupied(p)) {
            entries.push_back({idx, idx, cplx{1.0, 0.0}});
        }
    }
    return SparseOperator::from_triplets(basis.dim(), basis.dim(), basis.tag(), basis.tag(),
                                         std::move(entries));
}

SparseOperator pair_creation(const FockBasis& basis, std::size_t money_k,
                             std::size_t debt_q) {
    const std::size_t pk = basis.position(money_mode(money_k));
    const std::size_t pq = basis.position(debt_mode(debt_q));
    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        const OccupationState occ = basis.occupation_of(idx);
        if (occ.occupied(pk) || occ.occupied(pq)) continue;
        const OccupationState with_money = occ.with_bit(pk, true);
        const double sign = jw_sign(occ, pk) * jw_sign(with_money, pq);
        const OccupationState both = with_money.with_bit(pq, true);
        const auto out = basis.try_index_of(both);
        if (!out) continue;  // sector basis without the image state
        entries.push_back({*out, idx, cplx{sign, 0.0}});
    }
    return SparseOperator::from_triplets(basis.dim(), basis.dim(), basis.tag(), basis.tag(),
                                         std::move(entries));
}

SparseOperator exchange(const FockBasis& basis, ModeId i, ModeId j) {
    if (i == j) {
        fail(errc::same_mode, "exchange requires two distinct modes");
    }
    const std::size_t pi = basis.position(i);
    const std::size_t pj = basis.position(j);
    const std::size_t lo = std::min(pi, pj);
    const std::size_t hi = std::max(pi, pj);

    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        const OccupationState occ = basis.occupation_of(idx);
        const bool a = occ.occupied(lo);
        const bool b = occ.occupied(hi);
        if (a == b) {
            // Both empty: nothing moves. Both occupied: exchanging two
            // fermions flips the sign.
            entries.push_back({idx, idx, cplx{a ? -1.0 : 1.0, 0.0}});
            continue;
        }
        const OccupationState swapped = occ.with_bit(lo, b).with_bit(hi, a);
        const auto out = basis.try_index_of(swapped);
        if (!out) {
            fail(errc::sector_mismatch, "exchange image " + swapped.to_string() +
                                            " leaves the sector basis");
        }
        // Transferring one fermion across the interval crosses the
        // Jordan-Wigner string of everything occupied strictly between.
        const std::size_t between =
            occ.occupied_below(hi) - occ.occupied_below(lo + 1);
        entries.push_back({*out, idx, cplx{between % 2 == 0 ? 1.0 : -1.0, 0.0}});
    }
    return SparseOperator::from_triplets(basis.dim(), basis.dim(), basis.tag(), basis.tag(),
                                         std::move(entries));
}

SparseOperator sigma_x(const QubitRegister& reg, const std::string& target) {
    const std::size_t p = reg.position(target);
    const std::size_t mask = std::size_t{1} << (reg.size() - 1 - p);
    std::vector<Triplet> entries;
    entries.reserve(reg.dim());
    for (std::size_t idx = 0; idx < reg.dim(); ++idx) {
        entries.push_back({idx ^ mask, idx, cplx{1.0, 0.0}});
    }
    return SparseOperator::from_triplets(reg.dim(), reg.dim(), BasisTag{reg.tag()},
                                         BasisTag{reg.tag()}, std::move(entries));
}

SparseOperator qubit_projector(const QubitRegister& reg, const std::string& target,
                               bool spin_up) {
    const std::size_t p = reg.position(target);
    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < reg.dim(); ++idx) {
        if (reg.is_down(idx, p) != spin_up) {
            entries.push_back({idx, idx, cplx{1.0, 0.0}});
        }
    }
    return SparseOperator::from_triplets(reg.dim(), reg.dim(), BasisTag{reg.tag()},
                                         BasisTag{reg.tag()}, std::move(entries));
}

SparseOperator total_number(const FockBasis& basis, Species species) {
    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        const OccupationState occ = basis.occupation_of(idx);
        const double n = species == Species::money
                             ? static_cast<double>(basis.money_count(occ))
                             : static_cast<double>(basis.debt_count(occ));
        if (n != 0.0) entries.push_back({idx, idx, cplx{n, 0.0}});
    }
    return SparseOperator::from_triplets(basis.dim(), basis.dim(), basis.tag(), basis.tag(),
                                         std::move(entries));
}

SparseOperator charge_operator(const FockBasis& basis) {
    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        const int q = basis.charge_of(basis.occupation_of(idx));
        if (q != 0) entries.push_back({idx, idx, cplx{static_cast<double>(q), 0.0}});
    }
    return SparseOperator::from_triplets(basis.dim(), basis.dim(), basis.tag(), basis.tag(),
                                         std::move(entries));
}

}  // namespace econofock
