// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace econofock {

/// Error codes for every failure mode the library contracts name.
enum class errc {
    dimension_too_large,
    empty_sector,
    not_in_basis,
    index_out_of_range,
    sector_mismatch,
    same_mode,
    unknown_label,
    basis_mismatch,
    dimension_mismatch,
    schedule_violates_initial_condition,
    non_hermitian,
    dimension_too_large_for_dense,
    step_norm_drift,
    vacuum_not_in_sector,
    not_normalized,
    incomplete_projectors,
    zero_probability_collapse,
    invalid_partition,
    invalid_density_matrix,
    wrong_basis_kind,
    too_many_states,
    non_finite_potential,
    parse_error,
    validation_error,
    unsupported_format,
    io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

/// One entry of a scenario validation report, e.g. {"terms[1].viol.delta_pr", "must be >= 0"}.
struct ValidationIssue {
    std::string path;
    std::string message;
};

/// Carries the complete list of scenario validation failures, not just the first.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<ValidationIssue> issues)
        : Error(errc::validation_error, summarize(issues)), issues_(std::move(issues)) {}

    const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

private:
    static std::string summarize(const std::vector<ValidationIssue>& issues);
    std::vector<ValidationIssue> issues_;
};

}  // namespace econofock
