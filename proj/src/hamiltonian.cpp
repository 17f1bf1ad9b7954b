// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "econofock/ops.hpp"

namespace econofock {

ModeEnergies ModeEnergies::symmetric(std::vector<double> money_energies) {
    ModeEnergies energies;
    energies.debt.reserve(money_energies.size());
    for (double e : money_energies) energies.debt.push_back(-e);
    energies.money = std::move(money_energies);
    energies.particle_hole_symmetric = true;
    return energies;
}

ModeEnergies ModeEnergies::zero(std::size_t m_money, std::size_t n_debt) {
    return {std::vector<double>(m_money, 0.0), std::vector<double>(n_debt, 0.0), false};
}

void ModeEnergies::validate(const FockBasis& basis) const {
    if (money.size() != basis.money_modes() || debt.size() != basis.debt_modes()) {
        fail(errc::dimension_mismatch,
             "energies sized (" + std::to_string(money.size()) + "," +
                 std::to_string(debt.size()) + ") for basis (M=" +
                 std::to_string(basis.money_modes()) + ",D=" +
                 std::to_string(basis.debt_modes()) + ")");
    }
    for (double e : money) {
        if (!std::isfinite(e)) fail(errc::dimension_mismatch, "non-finite money energy");
    }
    for (double e : debt) {
        if (!std::isfinite(e)) fail(errc::dimension_mismatch, "non-finite debt energy");
    }
    if (particle_hole_symmetric) {
        if (money.size() != debt.size()) {
            fail(errc::dimension_mismatch,
                 "particle-hole symmetric energies need M = D");
        }
        for (std::size_t k = 0; k < money.size(); ++k) {
            if (std::abs(debt[k] + money[k]) > 1e-12) {
                fail(errc::dimension_mismatch,
                     "symmetric energies require eps_debt[k] = -eps_money[k]");
            }
        }
    }
}

Schedule Schedule::constant(double value) {
    return {Kind::constant, {value}, {}};
}

Schedule Schedule::linear_ramp(double slope) {
    return {Kind::linear_ramp, {slope}, {}};
}

Schedule Schedule::exponential(double a, double b) {
    return {Kind::exponential, {a, b}, {}};
}

Schedule Schedule::piecewise_linear(std::vector<std::pair<double, double>> points) {
    if (points.empty()) {
        fail(errc::dimension_mismatch, "piecewise schedule needs at least one point");
    }
    if (!std::is_sorted(points.begin(), points.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; })) {
        fail(errc::dimension_mismatch, "piecewise schedule points must ascend in t");
    }
    return {Kind::piecewise_linear, {}, std::move(points)};
}

double Schedule::value(double t) const {
    switch (kind_) {
        case Kind::constant:
            return params_[0];
        case Kind::linear_ramp:
            return params_[0] * t;
        case Kind::exponential:
            return params_[0] * (std::exp(params_[1] * t) - 1.0);
        case Kind::piecewise_linear: {
            if (t <= points_.front().first) return points_.front().second;
            if (t >= points_.back().first) return points_.back().second;
            for (std::size_t i = 1; i < points_.size(); ++i) {
                if (t <= points_[i].first) {
                    const auto& [t0, v0] = points_[i - 1];
                    const auto& [t1, v1] = points_[i];
                    const double w = (t - t0) / (t1 - t0);
                    return v0 + w * (v1 - v0);
                }
            }
            return points_.back().second;
        }
    }
    return 0.0;
}

CouplingMatrix CouplingMatrix::uniform(std::size_t m, std::size_t d, cplx u) {
    return {m, d, std::vector<cplx>(m * d, u)};
}

CouplingMatrix CouplingMatrix::zero(std::size_t m, std::size_t d) {
    return uniform(m, d, cplx{0.0, 0.0});
}

void CouplingMatrix::validate(const FockBasis& basis) const {
    if (money_modes != basis.money_modes() || debt_modes != basis.debt_modes() ||
        entries.size() != money_modes * debt_modes) {
        fail(errc::dimension_mismatch, "coupling matrix must be M x D for the basis");
    }
    for (const cplx& u : entries) {
        if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) {
            fail(errc::dimension_mismatch, "non-finite coupling entry");
        }
    }
}

void ViolationSpec::validate() const {
    if (!(delta_pr >= 0.0) || !std::isfinite(delta_pr)) {
        fail(errc::dimension_mismatch, "delta_pr must be finite and >= 0");
    }
    if (!(g_viol >= 0.0) || !std::isfinite(g_viol)) {
        fail(errc::dimension_mismatch, "g_viol must be finite and >= 0");
    }
    for (const auto& [pair, value] : overrides) {
        if (!(value >= 0.0) || !std::isfinite(value)) {
            fail(errc::dimension_mismatch, "per-pair override must be finite and >= 0");
        }
    }
}

namespace {

SparseOperator diagonal_number_sum(const FockBasis& basis,
                                   std::span<const double> money_coeff,
                                   std::span<const double> debt_coeff) {
    std::vector<Triplet> entries;
    entries.reserve(basis.dim());
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        const OccupationState occ = basis.occupation_of(idx);
        double value = 0.0;
        for (std::size_t k = 0; k < basis.money_modes(); ++k) {
            if (occ.occupied(k)) value += money_coeff[k];
        }
        for (std::size_t q = 0; q < basis.debt_modes(); ++q) {
            if (occ.occupied(basis.money_modes() + q)) value += debt_coeff[q];
        }
        if (value != 0.0) entries.push_back({idx, idx, cplx{value, 0.0}});
    }
    return SparseOperator::from_triplets(basis.dim(), basis.dim(), basis.tag(), basis.tag(),
                                         std::move(entries));
}

}  // namespace

SparseOperator h_free(const FockBasis& basis, const ModeEnergies& energies) {
    energies.validate(basis);
    return diagonal_number_sum(basis, energies.money, energies.debt);
}

SparseOperator v_perturb(const FockBasis& basis, std::span<const Schedule> profit,
                         std::span<const Schedule> interest, double t) {
    if (profit.size() != basis.money_modes() || interest.size() != basis.debt_modes()) {
        fail(errc::dimension_mismatch, "one schedule per mode is required");
    }
    for (const Schedule& s : profit) {
        if (std::abs(s.value(0.0)) > 1e-12) {
            fail(errc::schedule_violates_initial_condition,
                 "profit schedule has value(0) != 0");
        }
    }
    for (const Schedule& s : interest) {
        if (std::abs(s.value(0.0)) > 1e-12) {
            fail(errc::schedule_violates_initial_condition,
                 "interest schedule has value(0) != 0");
        }
    }
    std::vector<double> money_coeff(profit.size());
    std::vector<double> debt_coeff(interest.size());
    for (std::size_t k = 0; k < profit.size(); ++k) money_coeff[k] = profit[k].value(t);
    for (std::size_t q = 0; q < interest.size(); ++q) debt_coeff[q] = interest[q].value(t);
    return diagonal_number_sum(basis, money_coeff, debt_coeff);
}

SparseOperator v_perturb(const FockBasis& basis, const Schedule& profit,
                         const Schedule& interest, double t) {
    const std::vector<Schedule> profits(basis.money_modes(), profit);
    const std::vector<Schedule> interests(basis.debt_modes(), interest);
    return v_perturb(basis, profits, interests, t);
}

SparseOperator h_qe(const FockBasis& basis, double amplitude,
                    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    SparseOperator sum = SparseOperator::zero(basis.dim(), BasisTag{basis.tag()});
    for (const auto& [k, q] : pairs) {
        sum = add(sum, pair_creation(basis, k, q));
    }
    return scale(cplx{amplitude, 0.0}, plus_hermitian_conjugate(sum));
}

SparseOperator h_binding(const FockBasis& basis, const CouplingMatrix& coupling) {
    coupling.validate(basis);
    SparseOperator sum = SparseOperator::zero(basis.dim(), BasisTag{basis.tag()});
    for (std::size_t k = 0; k < coupling.money_modes; ++k) {
        for (std::size_t q = 0; q < coupling.debt_modes; ++q) {
            const cplx u = coupling.at(k, q);
            if (u == cplx{0.0, 0.0}) continue;
            sum = add(sum, scale(u, pair_creation(basis, k, q)));
        }
    }
    return plus_hermitian_conjugate(sum);
}

SparseOperator h_exciton(const FockBasis& basis, const ModeEnergies& energies,
                         const CouplingMatrix& coupling) {
    return add(h_free(basis, energies), h_binding(basis, coupling));
}

double viol_strength(const ViolationSpec& spec, std::size_t k, std::size_t q) {
    spec.validate();
    const auto it = spec.overrides.find({k, q});
    if (it != spec.overrides.end()) return it->second;
    return spec.g_viol * spec.delta_pr;
}

SparseOperator h_viol(const FockBasis& basis, const ViolationSpec& spec) {
    spec.validate();
    std::vector<Triplet> entries;
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        const OccupationState occ = basis.occupation_of(idx);
        double value = 0.0;
        for (std::size_t k = 0; k < basis.money_modes(); ++k) {
            if (!occ.occupied(k)) continue;
            for (std::size_t q = 0; q < basis.debt_modes(); ++q) {
                if (occ.occupied(basis.money_modes() + q)) {
                    value += viol_strength(spec, k, q);
                }
            }
        }
        if (value != 0.0) entries.push_back({idx, idx, cplx{value, 0.0}});
    }
    return SparseOperator::from_triplets(basis.dim(), basis.dim(), basis.tag(), basis.tag(),
                                         std::move(entries));
}

SparseOperator h_informal(const FockBasis& basis, const ModeEnergies& energies,
                          const CouplingMatrix& coupling, const ViolationSpec& spec,
                          std::span<const Schedule> profit,
                          std::span<const Schedule> interest, double t) {
    SparseOperator h = add(h_free(basis, energies), h_binding(basis, coupling));
    h = add(h, h_viol(basis, spec));
    return add(h, v_perturb(basis, profit, interest, t));
}

}  // namespace econofock
