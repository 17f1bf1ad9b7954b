// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/fock.hpp"

#include <algorithm>

namespace econofock {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::dimension_too_large: return "DimensionTooLarge";
        case errc::empty_sector: return "EmptySector";
        case errc::not_in_basis: return "NotInBasis";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::sector_mismatch: return "SectorMismatch";
        case errc::same_mode: return "SameMode";
        case errc::unknown_label: return "UnknownLabel";
        case errc::basis_mismatch: return "BasisMismatch";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::schedule_violates_initial_condition: return "ScheduleViolatesInitialCondition";
        case errc::non_hermitian: return "NonHermitian";
        case errc::dimension_too_large_for_dense: return "DimensionTooLargeForDense";
        case errc::step_norm_drift: return "StepNormDrift";
        case errc::vacuum_not_in_sector: return "VacuumNotInSector";
        case errc::not_normalized: return "NotNormalized";
        case errc::incomplete_projectors: return "IncompleteProjectors";
        case errc::zero_probability_collapse: return "ZeroProbabilityCollapse";
        case errc::invalid_partition: return "InvalidPartition";
        case errc::invalid_density_matrix: return "InvalidDensityMatrix";
        case errc::wrong_basis_kind: return "WrongBasisKind";
        case errc::too_many_states: return "TooManyStates";
        case errc::non_finite_potential: return "NonFinitePotential";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
        case errc::unsupported_format: return "UnsupportedFormat";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

std::string ValidationError::summarize(const std::vector<ValidationIssue>& issues) {
    std::string out = std::to_string(issues.size()) + " issue(s)";
    for (const auto& issue : issues) {
        out += "; " + issue.path + ": " + issue.message;
    }
    return out;
}

OccupationState OccupationState::from_string(const std::string& pattern) {
    if (pattern.empty() || pattern.size() > max_total_modes) {
        fail(errc::not_in_basis, "occupation string must have 1.." +
                                     std::to_string(max_total_modes) + " characters");
    }
    std::uint32_t bits = 0;
    for (char c : pattern) {
        if (c != '0' && c != '1') {
            fail(errc::not_in_basis, "occupation string may contain only '0' and '1'");
        }
        bits = (bits << 1) | static_cast<std::uint32_t>(c == '1');
    }
    return {bits, pattern.size()};
}

std::string OccupationState::to_string() const {
    std::string out(width_, '0');
    for (std::size_t p = 0; p < width_; ++p) {
        if (occupied(p)) out[p] = '1';
    }
    return out;
}

std::string tag_description(const BasisTag& tag) {
    if (const auto* fock = std::get_if<FockTag>(&tag)) {
        std::string out = "fock(M=" + std::to_string(fock->m_money) +
                          ",D=" + std::to_string(fock->n_debt);
        if (fock->sector) out += ",Q=" + std::to_string(*fock->sector);
        return out + ")";
    }
    const auto& qubits = std::get<QubitTag>(tag);
    std::string out = "register(";
    for (std::size_t i = 0; i < qubits.labels.size(); ++i) {
        if (i) out += ",";
        out += qubits.labels[i];
    }
    return out + ")";
}

std::size_t FockBasis::position(ModeId mode) const {
    if (mode.species == Species::money) {
        if (mode.index >= m_money_) {
            fail(errc::index_out_of_range,
                 "money mode " + std::to_string(mode.index) + " out of range for M=" +
                     std::to_string(m_money_));
        }
        return mode.index;
    }
    if (mode.index >= n_debt_) {
        fail(errc::index_out_of_range, "debt mode " + std::to_string(mode.index) +
                                           " out of range for D=" + std::to_string(n_debt_));
    }
    return m_money_ + mode.index;
}

OccupationState FockBasis::occupation_of(std::size_t index) const {
    if (index >= dim_) {
        fail(errc::index_out_of_range,
             "index " + std::to_string(index) + " >= dim " + std::to_string(dim_));
    }
    const std::uint32_t bits =
        sector_ ? states_[index] : static_cast<std::uint32_t>(index);
    return {bits, total_modes()};
}

std::optional<std::size_t> FockBasis::try_index_of(const OccupationState& occ) const {
    if (occ.width() != total_modes()) return std::nullopt;
    if (!sector_) return occ.bits();
    const auto it = std::lower_bound(states_.begin(), states_.end(), occ.bits());
    if (it == states_.end() || *it != occ.bits()) return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
}

std::size_t FockBasis::index_of(const OccupationState& occ) const {
    if (occ.width() != total_modes()) {
        fail(errc::not_in_basis, "occupation width " + std::to_string(occ.width()) +
                                     " does not match " + std::to_string(total_modes()) +
                                     " modes");
    }
    const auto index = try_index_of(occ);
    if (!index) {
        fail(errc::not_in_basis, "state " + occ.to_string() + " violates sector Q=" +
                                     std::to_string(*sector_));
    }
    return *index;
}

int FockBasis::charge_of(const OccupationState& occ) const {
    return static_cast<int>(money_count(occ)) - static_cast<int>(debt_count(occ));
}

std::size_t FockBasis::money_count(const OccupationState& occ) const {
    return static_cast<std::size_t>(std::popcount(occ.bits() >> n_debt_));
}

std::size_t FockBasis::debt_count(const OccupationState& occ) const {
    const std::uint32_t mask = n_debt_ ? ((1u << n_debt_) - 1u) : 0u;
    return static_cast<std::size_t>(std::popcount(occ.bits() & mask));
}

FockBasis build_basis(std::size_t m_money, std::size_t n_debt, std::optional<int> sector) {
    if (m_money + n_debt > max_total_modes) {
        fail(errc::dimension_too_large,
             "M+D = " + std::to_string(m_money + n_debt) + " exceeds the cap of " +
                 std::to_string(max_total_modes) + " modes (2^24 index space)");
    }
    FockBasis basis;
    basis.m_money_ = m_money;
    basis.n_debt_ = n_debt;
    basis.sector_ = sector;

    const std::size_t full_dim = std::size_t{1} << (m_money + n_debt);
    if (!sector) {
        basis.dim_ = full_dim;
        return basis;
    }

    for (std::uint32_t bits = 0; bits < full_dim; ++bits) {
        const OccupationState occ{bits, m_money + n_debt};
        if (basis.charge_of(occ) == *sector) basis.states_.push_back(bits);
    }
    if (basis.states_.empty()) {
        fail(errc::empty_sector,
             "sector Q=" + std::to_string(*sector) + " admits no states for M=" +
                 std::to_string(m_money) + ", D=" + std::to_string(n_debt));
    }
    basis.dim_ = basis.states_.size();
    return basis;
}

}  // namespace econofock
