// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "econofock/fock.hpp"
#include "econofock/sparse.hpp"

namespace econofock {

/// Per-mode energies in economic energy units (hbar = 1, time in periods).
/// With the particle_hole_symmetric flag, debt energies must mirror money
/// energies as eps_debt[k] = -eps_money[k].
struct ModeEnergies {
    std::vector<double> money;
    std::vector<double> debt;
    bool particle_hole_symmetric = false;

    static ModeEnergies symmetric(std::vector<double> money_energies);
    static ModeEnergies zero(std::size_t m_money, std::size_t n_debt);

    void validate(const FockBasis& basis) const;
};

/// Time-dependent coefficient for profit and interest perturbations. Any
/// schedule used in a perturbation must vanish at t = 0.
class Schedule {
public:
    enum class Kind { constant, linear_ramp, exponential, piecewise_linear };

    static Schedule constant(double value);
    static Schedule linear_ramp(double slope);
    /// a * (exp(b t) - 1): compounding growth that vanishes at t = 0.
    static Schedule exponential(double a, double b);
    /// Linear interpolation through sorted (t, value) points, clamped outside.
    static Schedule piecewise_linear(std::vector<std::pair<double, double>> points);

    Kind kind() const { return kind_; }
    double value(double t) const;

private:
    Schedule(Kind kind, std::vector<double> params,
             std::vector<std::pair<double, double>> points)
        : kind_(kind), params_(std::move(params)), points_(std::move(points)) {}

    Kind kind_;
    std::vector<double> params_;
    std::vector<std::pair<double, double>> points_;
};

/// Institutional money-debt coupling U_kq (M x D, row-major).
struct CouplingMatrix {
    std::size_t money_modes = 0;
    std::size_t debt_modes = 0;
    std::vector<cplx> entries;

    static CouplingMatrix uniform(std::size_t m, std::size_t d, cplx u);
    static CouplingMatrix zero(std::size_t m, std::size_t d);

    cplx at(std::size_t k, std::size_t q) const { return entries[k * debt_modes + q]; }
    void validate(const FockBasis& basis) const;
};

/// Strength specification of the coercive enforcement interaction. The
/// default law is linear in the poor-rich gap: V_kq = g_viol * delta_pr,
/// overridable per (money, debt) mode pair.
struct ViolationSpec {
    double delta_pr = 0.0;
    double g_viol = 1.0;
    std::map<std::pair<std::size_t, std::size_t>, double> overrides;

    void validate() const;
};

/// Diagonal free Hamiltonian: sum of mode energies times occupations.
SparseOperator h_free(const FockBasis& basis, const ModeEnergies& energies);

/// Diagonal profit/interest perturbation at time t. Every schedule must
/// satisfy value(0) = 0; the operator at t = 0 is exactly zero.
SparseOperator v_perturb(const FockBasis& basis, std::span<const Schedule> profit,
                         std::span<const Schedule> interest, double t);

/// Broadcast overload: one profit schedule for all money modes, one interest
/// schedule for all debt modes.
SparseOperator v_perturb(const FockBasis& basis, const Schedule& profit,
                         const Schedule& interest, double t);

/// g * sum over (k, q) pairs of (pair_creation + h.c.): balanced creation of
/// currency and bond-debt.
SparseOperator h_qe(const FockBasis& basis, double amplitude,
                    std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// The pairing (loan issuance) term alone: sum_kq U_kq pair_creation + h.c.
SparseOperator h_binding(const FockBasis& basis, const CouplingMatrix& coupling);

/// Bound money-debt pair Hamiltonian: h_free + h_binding.
SparseOperator h_exciton(const FockBasis& basis, const ModeEnergies& energies,
                         const CouplingMatrix& coupling);

/// Enforcement strength for one mode pair; nonnegative and nondecreasing in
/// delta_pr.
double viol_strength(const ViolationSpec& spec, std::size_t k, std::size_t q);

/// Diagonal density-density enforcement term: sum_kq V_kq n_money_k n_debt_q.
SparseOperator h_viol(const FockBasis& basis, const ViolationSpec& spec);

/// Full informal-lending Hamiltonian at time t:
/// h_free + h_binding + h_viol + v_perturb(t).
SparseOperator h_informal(const FockBasis& basis, const ModeEnergies& energies,
                          const CouplingMatrix& coupling, const ViolationSpec& spec,
                          std::span<const Schedule> profit,
                          std::span<const Schedule> interest, double t);

}  // namespace econofock
