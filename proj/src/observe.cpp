// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/observe.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "econofock/eigh.hpp"

namespace econofock {

namespace {

std::size_t tag_width(const BasisTag& tag) {
    if (const auto* fock = std::get_if<FockTag>(&tag)) {
        return fock->m_money + fock->n_debt;
    }
    return std::get<QubitTag>(tag).labels.size();
}

struct SplitPlan {
    std::vector<std::size_t> a_positions;  // ascending
    std::vector<std::size_t> b_positions;  // ascending
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    bool fermionic = false;
    BasisTag a_tag;
    BasisTag b_tag;
};

SplitPlan make_plan(const StateVector& psi, const Partition& part) {
    const std::size_t width = tag_width(psi.tag);
    std::vector<std::size_t> a = part.a_positions;
    std::sort(a.begin(), a.end());
    if (a.empty() || std::adjacent_find(a.begin(), a.end()) != a.end() ||
        a.back() >= width || a.size() >= width) {
        fail(errc::invalid_partition,
             "partition must name a nonempty proper subset of the " +
                 std::to_string(width) + " subsystem positions");
    }

    SplitPlan plan;
    plan.a_positions = std::move(a);
    for (std::size_t p = 0; p < width; ++p) {
        if (!std::binary_search(plan.a_positions.begin(), plan.a_positions.end(), p)) {
            plan.b_positions.push_back(p);
        }
    }
    plan.dim_a = std::size_t{1} << plan.a_positions.size();
    plan.dim_b = std::size_t{1} << plan.b_positions.size();
    if (plan.dim_a > max_dense_dim || plan.dim_b > max_dense_dim) {
        fail(errc::dimension_too_large_for_dense, "subsystem too large for dense work");
    }

    if (const auto* fock = std::get_if<FockTag>(&psi.tag)) {
        plan.fermionic = true;
        std::size_t money_in_a = 0;
        for (std::size_t p : plan.a_positions) {
            if (p < fock->m_money) ++money_in_a;
        }
        // Positions within A stay ascending, so A's money modes still precede
        // its debt modes and the subsystem is itself a valid mode ordering.
        plan.a_tag = FockTag{money_in_a, plan.a_positions.size() - money_in_a, {}};
        const std::size_t money_in_b = fock->m_money - money_in_a;
        plan.b_tag = FockTag{money_in_b, plan.b_positions.size() - money_in_b, {}};
    } else {
        const auto& labels = std::get<QubitTag>(psi.tag).labels;
        QubitTag a_tag, b_tag;
        for (std::size_t p : plan.a_positions) a_tag.labels.push_back(labels[p]);
        for (std::size_t p : plan.b_positions) b_tag.labels.push_back(labels[p]);
        plan.a_tag = std::move(a_tag);
        plan.b_tag = std::move(b_tag);
    }
    return plan;
}

/// Occupation pattern of the full index in MSB-first position order.
OccupationState occupation_for(const FockBasis* rebuilt, std::size_t index,
                               std::size_t width) {
    if (rebuilt) return rebuilt->occupation_of(index);
    return {static_cast<std::uint32_t>(index), width};
}

/// Coefficient matrix Psi[a, b] of the state in the A-then-B factorization,
/// including the fermionic reordering sign when applicable.
std::vector<cplx> coefficient_matrix(const StateVector& psi, const SplitPlan& plan) {
    const std::size_t width = tag_width(psi.tag);
    const auto* fock = std::get_if<FockTag>(&psi.tag);
    std::optional<FockBasis> rebuilt;
    const FockBasis* basis = nullptr;
    if (fock && fock->sector) {
        rebuilt = build_basis(fock->m_money, fock->n_debt, fock->sector);
        basis = &*rebuilt;
    }

    std::vector<cplx> matrix(plan.dim_a * plan.dim_b, cplx{0.0, 0.0});
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const cplx amp = psi.amplitudes[idx];
        if (amp == cplx{0.0, 0.0}) continue;
        const OccupationState occ = occupation_for(basis, idx, width);

        std::size_t ia = 0;
        for (std::size_t p : plan.a_positions) {
            ia = (ia << 1) | static_cast<std::size_t>(occ.occupied(p));
        }
        std::size_t ib = 0;
        for (std::size_t p : plan.b_positions) {
            ib = (ib << 1) | static_cast<std::size_t>(occ.occupied(p));
        }

        double sign = 1.0;
        if (plan.fermionic) {
            // Count inversions created by moving the occupied A modes in
            // front of the occupied B modes.
            std::size_t b_seen = 0;
            std::size_t inversions = 0;
            auto a_it = plan.a_positions.begin();
            for (std::size_t p = 0; p < width; ++p) {
                const bool in_a = a_it != plan.a_positions.end() && *a_it == p;
                if (in_a) ++a_it;
                if (!occ.occupied(p)) continue;
                if (in_a) {
                    inversions += b_seen;
                } else {
                    ++b_seen;
                }
            }
            if (inversions % 2 == 1) sign = -1.0;
        }
        matrix[ia * plan.dim_b + ib] += sign * amp;
    }
    return matrix;
}

DensityMatrix density_from_coefficients(const std::vector<cplx>& psi_ab,
                                        std::size_t dim_a, std::size_t dim_b,
                                        bool trace_out_b, BasisTag tag) {
    const std::size_t dim = trace_out_b ? dim_a : dim_b;
    DensityMatrix rho;
    rho.dim = dim;
    rho.tag = std::move(tag);
    rho.entries.assign(dim * dim, cplx{0.0, 0.0});
    if (trace_out_b) {
        for (std::size_t i = 0; i < dim_a; ++i) {
            for (std::size_t j = 0; j < dim_a; ++j) {
                cplx acc{0.0, 0.0};
                for (std::size_t b = 0; b < dim_b; ++b) {
                    acc += psi_ab[i * dim_b + b] * std::conj(psi_ab[j * dim_b + b]);
                }
                rho.entries[i * dim + j] = acc;
            }
        }
    } else {
        for (std::size_t i = 0; i < dim_b; ++i) {
            for (std::size_t j = 0; j < dim_b; ++j) {
                cplx acc{0.0, 0.0};
                for (std::size_t a = 0; a < dim_a; ++a) {
                    acc += psi_ab[a * dim_b + i] * std::conj(psi_ab[a * dim_b + j]);
                }
                rho.entries[i * dim + j] = acc;
            }
        }
    }
    return rho;
}

void check_density_invariants(const DensityMatrix& rho) {
    cplx trace{0.0, 0.0};
    for (std::size_t i = 0; i < rho.dim; ++i) trace += rho.at(i, i);
    if (std::abs(trace - cplx{1.0, 0.0}) > 1e-12) {
        fail(errc::invalid_density_matrix, "trace deviates from 1");
    }
    for (std::size_t i = 0; i < rho.dim; ++i) {
        for (std::size_t j = i; j < rho.dim; ++j) {
            if (std::abs(rho.at(i, j) - std::conj(rho.at(j, i))) > 1e-12) {
                fail(errc::invalid_density_matrix, "matrix is not hermitian");
            }
        }
    }
}

const FockTag& require_fock(const StateVector& psi, const char* what) {
    const auto* fock = std::get_if<FockTag>(&psi.tag);
    if (!fock) {
        fail(errc::wrong_basis_kind,
             std::string(what) + " is defined for Fock-basis states only");
    }
    return *fock;
}

}  // namespace

Partition money_vs_debt(const FockBasis& basis) {
    if (basis.money_modes() == 0 || basis.debt_modes() == 0) {
        fail(errc::invalid_partition,
             "money/debt split needs at least one mode of each species");
    }
    Partition part;
    for (std::size_t k = 0; k < basis.money_modes(); ++k) part.a_positions.push_back(k);
    return part;
}

Partition qubit_partition(const QubitRegister& reg,
                          std::span<const std::string> a_labels) {
    Partition part;
    for (const std::string& label : a_labels) {
        part.a_positions.push_back(reg.position(label));
    }
    return part;
}

cplx expectation(const SparseOperator& op, const StateVector& psi) {
    if (!(op.row_tag() == psi.tag) || !(op.col_tag() == psi.tag) ||
        op.rows() != psi.dim() || op.cols() != psi.dim()) {
        fail(errc::basis_mismatch, "operator and state act on different bases");
    }
    const std::vector<cplx> image = op.apply(psi.amplitudes);
    return kernels::dot(psi.amplitudes, image);
}

double expectation_real(const SparseOperator& op, const StateVector& psi) {
    return expectation(op, psi).real();
}

DensityMatrix reduced_density(const StateVector& psi, const Partition& part) {
    const SplitPlan plan = make_plan(psi, part);
    const std::vector<cplx> psi_ab = coefficient_matrix(psi, plan);
    DensityMatrix rho =
        density_from_coefficients(psi_ab, plan.dim_a, plan.dim_b, true, plan.a_tag);
    check_density_invariants(rho);
    return rho;
}

double entropy(const DensityMatrix& rho) {
    check_density_invariants(rho);
    const EighResult eig = eigh(rho.entries, rho.dim, false);
    double s = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -1e-10) {
            fail(errc::invalid_density_matrix,
                 "negative eigenvalue " + std::to_string(lambda));
        }
        if (lambda > 0.0) s -= lambda * std::log(lambda);
    }
    return std::max(0.0, s);
}

double mutual_information(const StateVector& psi, const Partition& part) {
    const SplitPlan plan = make_plan(psi, part);
    const std::vector<cplx> psi_ab = coefficient_matrix(psi, plan);
    const DensityMatrix rho_a =
        density_from_coefficients(psi_ab, plan.dim_a, plan.dim_b, true, plan.a_tag);
    const DensityMatrix rho_b =
        density_from_coefficients(psi_ab, plan.dim_a, plan.dim_b, false, plan.b_tag);
    // The joint state is the supplied vector, hence pure: S(rho_AB) = 0.
    return std::max(0.0, entropy(rho_a) + entropy(rho_b));
}

double separability_gap(const StateVector& psi, const Partition& part) {
    const SplitPlan plan = make_plan(psi, part);
    const std::vector<cplx> psi_ab = coefficient_matrix(psi, plan);
    const DensityMatrix rho_a =
        density_from_coefficients(psi_ab, plan.dim_a, plan.dim_b, true, plan.a_tag);
    const DensityMatrix rho_b =
        density_from_coefficients(psi_ab, plan.dim_a, plan.dim_b, false, plan.b_tag);

    // For the pure joint state rho = |psi><psi|:
    //   gap^2 = 1 - 2 <psi| rho_A x rho_B |psi> + Tr(rho_A^2) Tr(rho_B^2).
    const std::size_t da = plan.dim_a;
    const std::size_t db = plan.dim_b;

    std::vector<cplx> left(da * db, cplx{0.0, 0.0});  // rho_A * Psi
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t a = 0; a < da; ++a) {
            const cplx r = rho_a.at(i, a);
            if (r == cplx{0.0, 0.0}) continue;
            for (std::size_t b = 0; b < db; ++b) {
                left[i * db + b] += r * psi_ab[a * db + b];
            }
        }
    }
    cplx overlap{0.0, 0.0};  // <psi| rho_A x rho_B |psi>
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t b = 0; b < db; ++b) {
            cplx acc{0.0, 0.0};
            for (std::size_t bp = 0; bp < db; ++bp) {
                acc += left[i * db + bp] * rho_b.at(b, bp);
            }
            overlap += std::conj(psi_ab[i * db + b]) * acc;
        }
    }

    double purity_a = 0.0, purity_b = 0.0;
    for (const cplx& v : rho_a.entries) purity_a += std::norm(v);
    for (const cplx& v : rho_b.entries) purity_b += std::norm(v);

    const double gap_sq = 1.0 - 2.0 * overlap.real() + purity_a * purity_b;
    return std::sqrt(std::max(0.0, gap_sq));
}

double charge(const StateVector& psi) {
    const FockTag& tag = require_fock(psi, "charge");
    FockBasis basis = build_basis(tag.m_money, tag.n_debt, tag.sector);
    double q = 0.0;
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const double w = std::norm(psi.amplitudes[idx]);
        if (w == 0.0) continue;
        q += w * static_cast<double>(basis.charge_of(basis.occupation_of(idx)));
    }
    return q;
}

double exciton_count(const StateVector& psi) {
    const FockTag& tag = require_fock(psi, "exciton_count");
    FockBasis basis = build_basis(tag.m_money, tag.n_debt, tag.sector);
    double count = 0.0;
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const double w = std::norm(psi.amplitudes[idx]);
        if (w == 0.0) continue;
        const OccupationState occ = basis.occupation_of(idx);
        count += w * static_cast<double>(
                         std::min(basis.money_count(occ), basis.debt_count(occ)));
    }
    return count;
}

TimeSeries record_series(const TimeGrid& grid, const ObservableSet& observables,
                         std::span<const StateVector> trajectory) {
    grid.validate();
    if (observables.names.size() != observables.evaluators.size()) {
        fail(errc::dimension_mismatch, "observable names and evaluators differ in count");
    }
    if (trajectory.size() != grid.n_steps + 1) {
        fail(errc::dimension_mismatch,
             "trajectory must hold n_steps + 1 states (inclusive endpoints)");
    }
    TimeSeries series;
    series.names = observables.names;
    series.times.reserve(trajectory.size());
    series.rows.reserve(trajectory.size());
    for (std::size_t node = 0; node < trajectory.size(); ++node) {
        const double t = grid.time_at(node);
        series.times.push_back(t);
        std::vector<double> row;
        row.reserve(observables.evaluators.size());
        for (const auto& eval : observables.evaluators) {
            row.push_back(eval(t, trajectory[node]));
        }
        series.rows.push_back(std::move(row));
    }
    return series;
}

}  // namespace econofock
