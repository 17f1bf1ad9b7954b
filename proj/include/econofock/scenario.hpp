// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "econofock/exciton1d.hpp"
#include "econofock/hamiltonian.hpp"
#include "econofock/observe.hpp"

namespace econofock {

inline constexpr const char* engine_version = "1.0.0";
inline constexpr int scenario_schema_version = 1;

/// One Hamiltonian term of a scenario. "exciton" is the pairing (binding)
/// term alone so that listing "free" alongside it never double-counts the
/// mode energies.
struct TermSpec {
    enum class Type { free, qe, exciton, viol, perturb, exchange };

    Type type = Type::free;
    double amplitude = 1.0;                                   // qe, exchange
    std::vector<std::pair<std::size_t, std::size_t>> pairs;   // qe
    CouplingMatrix coupling;                                  // exciton
    ViolationSpec viol;                                       // viol
    std::vector<Schedule> profit;                             // perturb, per money mode
    std::vector<Schedule> interest;                           // perturb, per debt mode
    std::vector<std::pair<ModeId, ModeId>> swaps;             // exchange
};

struct InitialStateSpec {
    enum class Kind {
        vacuum,
        qe_pair,
        loan_pair,
        single_money,
        basis_state,
        asset_superposition,
        bell_qe,
        register_state,
    };

    Kind kind = Kind::vacuum;
    std::size_t money_mode = 0;
    std::size_t debt_mode = 0;
    std::size_t mode = 0;
    std::string occupation;
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};
    std::string pattern;
};

/// Instantaneous repayment: the adjoint pair operator applied at the first
/// grid node at or after `time`, then renormalized.
struct EventSpec {
    double time = 0.0;
    std::size_t money_mode = 0;
    std::size_t debt_mode = 0;
};

/// Seeded projective measurement of one register qubit after evolution.
struct MeasureSpec {
    std::string target;
    std::size_t trials = 1;
};

struct ScenarioConfig {
    int schema_version = scenario_schema_version;
    std::string name;

    bool is_register = false;
    std::size_t money_modes = 0;
    std::size_t debt_modes = 0;
    std::optional<int> sector;
    std::vector<std::string> qubits;

    ModeEnergies energies;
    std::vector<TermSpec> terms;
    InitialStateSpec initial_state;
    TimeGrid grid;
    std::vector<std::string> observables;
    std::uint64_t seed = 0;
    std::vector<std::string> outputs;  // "csv" and/or "jsonl"
    std::vector<EventSpec> events;
    std::optional<MeasureSpec> measure;

    /// Canonicalized source document and its stable FNV-1a digest.
    nlohmann::json document;
    std::string config_hash;
};

struct ParseOutcome {
    std::optional<ScenarioConfig> config;
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty() && config.has_value(); }
};

/// Parse and validate a scenario document, reporting every violation found
/// (not just the first). Throws only ParseError, on malformed JSON.
ParseOutcome parse_scenario(const std::string& text);

/// Canonical text form; parse(serialize(config)) reproduces the config.
std::string serialize_scenario(const ScenarioConfig& config);

struct MeasurementSummary {
    std::string target;
    std::size_t trials = 0;
    double frequency_up = 0.0;
    std::size_t first_outcome = 0;  // 0 = up, 1 = down
};

struct RunResult {
    TimeSeries series;

    struct Amplitude {
        std::string label;
        cplx value;
        double probability;
    };
    std::vector<Amplitude> leading_amplitudes;
    std::optional<double> final_charge;
    std::optional<double> final_exciton_count;
    std::optional<double> final_entropy;
    std::optional<double> final_mutual_information;
    std::optional<double> final_separability_gap;
    std::optional<MeasurementSummary> measurement;

    std::string name;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string version;
    std::string generator;
    double norm_drift = 0.0;
};

/// Deterministic end-to-end run: basis, Hamiltonian terms, initial state,
/// evolution, per-node observables, optional events and measurement.
RunResult run_scenario(const ScenarioConfig& config);

enum class ExportFormat { csv, json_lines };

/// Render the run as a document; byte-identical across runs of one config.
std::string export_series(const RunResult& result, ExportFormat format);

/// The static part of the scenario Hamiltonian (every non-perturb term).
SparseOperator assemble_static_hamiltonian(const ScenarioConfig& config);

std::vector<std::string> preset_names();
std::string preset_text(const std::string& name);

/// Valid observable names for a parsed configuration's basis.
std::vector<std::string> valid_observables(const ScenarioConfig& config);

/// Stable 64-bit FNV-1a digest, hex-encoded.
std::string fnv1a_hex(const std::string& bytes);

// --- 1-D exciton solver configuration ------------------------------------

struct Exciton1dConfig {
    exciton1d::GridSpec grid;
    exciton1d::PotentialSpec potential;
    double mass = 1.0;
    std::size_t n_states = 1;
    std::optional<std::string> potential_file;   // two-column x, V(x)
    std::optional<std::string> wavefunction_csv;  // output path
};

struct Exciton1dParseOutcome {
    std::optional<Exciton1dConfig> config;
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty() && config.has_value(); }
};

Exciton1dParseOutcome parse_exciton1d_config(const std::string& text);

/// Parse a two-column (x, V) table, comma or whitespace separated, and check
/// the x column against the grid within 1e-6 of the spacing.
std::vector<double> read_tabulated_potential(const std::string& text,
                                             const exciton1d::GridSpec& grid);

/// Wavefunction table: header x,psi_0,... and one row per grid point.
std::string wavefunctions_csv(const exciton1d::GridSpec& grid,
                              const exciton1d::EigenResult& result);

}  // namespace econofock
