// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "econofock/eigh.hpp"
#include "econofock/evolve.hpp"
#include "econofock/scenario.hpp"

namespace {

using namespace econofock;

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_numerical = 2;
constexpr int exit_io = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(errc::io_error, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(errc::io_error, "cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        fail(errc::io_error, "short write to '" + path + "'");
    }
}

void print_issues(const std::vector<ValidationIssue>& issues) {
    for (const auto& issue : issues) {
        std::cerr << "  " << (issue.path.empty() ? "<root>" : issue.path) << ": "
                  << issue.message << "\n";
    }
}

int cmd_validate(const std::string& config_path) {
    const ParseOutcome outcome = parse_scenario(read_file(config_path));
    if (!outcome.ok()) {
        std::cerr << config_path << ": " << outcome.issues.size()
                  << " validation issue(s)\n";
        print_issues(outcome.issues);
        return exit_validation;
    }
    std::cout << "OK: " << outcome.config->name << " (config_hash "
              << outcome.config->config_hash << ")\n";
    return exit_ok;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::string& format) {
    const ParseOutcome outcome = parse_scenario(read_file(config_path));
    if (!outcome.ok()) {
        std::cerr << config_path << ": " << outcome.issues.size()
                  << " validation issue(s)\n";
        print_issues(outcome.issues);
        return exit_validation;
    }
    const ScenarioConfig& config = *outcome.config;
    const RunResult result = run_scenario(config);

    std::vector<std::string> formats = config.outputs;
    if (!format.empty()) formats = {format};

    std::filesystem::create_directories(out_dir);
    for (const std::string& fmt : formats) {
        const ExportFormat kind =
            fmt == "csv" ? ExportFormat::csv : ExportFormat::json_lines;
        const std::string path = (std::filesystem::path(out_dir) /
                                  (config.name + (fmt == "csv" ? ".csv" : ".jsonl")))
                                     .string();
        write_file(path, export_series(result, kind));
        std::cout << "wrote " << path << "\n";
    }
    std::cout << "norm_drift " << result.norm_drift << ", config_hash "
              << result.config_hash << "\n";
    if (result.measurement) {
        std::cout << "measurement of '" << result.measurement->target << "': "
                  << result.measurement->trials << " trials, frequency_up "
                  << result.measurement->frequency_up << "\n";
    }
    return exit_ok;
}

int cmd_spectrum(const std::string& config_path) {
    const ParseOutcome outcome = parse_scenario(read_file(config_path));
    if (!outcome.ok()) {
        std::cerr << config_path << ": " << outcome.issues.size()
                  << " validation issue(s)\n";
        print_issues(outcome.issues);
        return exit_validation;
    }
    const SparseOperator h = assemble_static_hamiltonian(*outcome.config);
    const EighResult eig = eigh(h.to_dense(), h.dim(), false);
    char buf[40];
    for (double value : eig.eigenvalues) {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        std::cout << buf << "\n";
    }
    return exit_ok;
}

int cmd_exciton1d(const std::string& config_path) {
    const Exciton1dParseOutcome outcome = parse_exciton1d_config(read_file(config_path));
    if (!outcome.ok()) {
        std::cerr << config_path << ": " << outcome.issues.size()
                  << " validation issue(s)\n";
        print_issues(outcome.issues);
        return exit_validation;
    }
    Exciton1dConfig config = *outcome.config;
    if (config.potential_file) {
        const auto table_path =
            std::filesystem::path(config_path).parent_path() / *config.potential_file;
        config.potential = exciton1d::PotentialSpec::tabulated(
            read_tabulated_potential(read_file(table_path.string()), config.grid));
    }
    const exciton1d::EigenResult result = exciton1d::solve_eigen(
        config.grid, config.potential, config.mass, config.n_states);
    char buf[40];
    for (double energy : result.energies) {
        std::snprintf(buf, sizeof(buf), "%.17g", energy);
        std::cout << buf << "\n";
    }
    if (config.wavefunction_csv) {
        write_file(*config.wavefunction_csv, wavefunctions_csv(config.grid, result));
        std::cout << "wrote " << *config.wavefunction_csv << "\n";
    }
    return exit_ok;
}

int cmd_presets_list() {
    for (const std::string& name : preset_names()) {
        std::cout << name << "\n";
    }
    return exit_ok;
}

int cmd_presets_show(const std::string& name) {
    std::cout << preset_text(name) << "\n";
    return exit_ok;
}

// Condensed invariant battery; the full suites live under tests/.
int cmd_selftest() {
    std::size_t failures = 0;
    const auto check = [&failures](const char* name, auto&& body) {
        try {
            body();
            std::cout << "[ ok ] " << name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
        }
    };
    const auto expect = [](bool condition, const std::string& detail) {
        if (!condition) throw std::runtime_error(detail);
    };

    check("canonical anticommutation on M+D <= 4", [&] {
        for (const auto& [m, d] :
             std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {1, 2}, {2, 2}}) {
            const FockBasis basis = build_basis(m, d);
            std::vector<ModeId> modes;
            for (std::size_t k = 0; k < m; ++k) modes.push_back(money_mode(k));
            for (std::size_t q = 0; q < d; ++q) modes.push_back(debt_mode(q));
            const SparseOperator id =
                SparseOperator::identity(basis.dim(), BasisTag{basis.tag()});
            for (const ModeId& a : modes) {
                for (const ModeId& b : modes) {
                    const SparseOperator anti =
                        add(multiply(annihilation(basis, a), creation(basis, b)),
                            multiply(creation(basis, b), annihilation(basis, a)));
                    const double deviation =
                        a == b ? max_abs_diff(anti, id)
                               : max_abs_diff(anti,
                                              SparseOperator::zero(
                                                  basis.dim(), BasisTag{basis.tag()}));
                    expect(deviation < 1e-12, "anticommutator deviates");
                }
            }
        }
    });

    check("involutions: exchange^2 = I and sigma_x^2 = I", [&] {
        const FockBasis basis = build_basis(2, 1);
        const SparseOperator p = exchange(basis, money_mode(0), money_mode(1));
        expect(max_abs_diff(multiply(p, p),
                            SparseOperator::identity(basis.dim(),
                                                     BasisTag{basis.tag()})) < 1e-14,
               "exchange is not an involution");
        const QubitRegister reg({"asset"});
        const SparseOperator x = sigma_x(reg, "asset");
        expect(max_abs_diff(multiply(x, x),
                            SparseOperator::identity(2, BasisTag{reg.tag()})) < 1e-14,
               "sigma_x is not an involution");
    });

    check("number = creation * annihilation", [&] {
        const FockBasis basis = build_basis(1, 1);
        expect(max_abs_diff(number(basis, money_mode(0)),
                            multiply(creation(basis, money_mode(0)),
                                     annihilation(basis, money_mode(0)))) < 1e-14,
               "operator identity fails");
    });

    check("particle-hole symmetric spectrum", [&] {
        const FockBasis basis = build_basis(2, 2);
        const SparseOperator h = h_free(basis, ModeEnergies::symmetric({0.3, 0.47}));
        const EighResult eig = eigh(h.to_dense(), basis.dim(), false);
        for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
            expect(std::abs(eig.eigenvalues[i] +
                            eig.eigenvalues[eig.eigenvalues.size() - 1 - i]) < 1e-10,
                   "spectrum is not mirror-symmetric");
        }
    });

    check("perturbation vanishes at t = 0", [&] {
        const FockBasis basis = build_basis(1, 1);
        const SparseOperator v = v_perturb(basis, Schedule::linear_ramp(0.4),
                                           Schedule::exponential(1.0, 0.7), 0.0);
        expect(v.nonzeros() == 0, "V(0) is not the zero operator");
    });

    check("QE Rabi transfer at t = pi/2", [&] {
        const FockBasis basis = build_basis(1, 1);
        const std::vector<std::pair<std::size_t, std::size_t>> pairs = {{0, 0}};
        const StateVector psi = evolve_static(h_qe(basis, 1.0, pairs), vacuum(basis),
                                              std::numbers::pi / 2);
        const double n = expectation_real(total_number(basis, Species::money), psi);
        expect(std::abs(n - 1.0) < 1e-9, "money occupation missed sin^2");
    });

    check("Bell-state entanglement values", [&] {
        const QubitRegister reg(bell_qe_labels());
        const std::vector<std::string> first = {"money_valuation"};
        const Partition part = qubit_partition(reg, first);
        const StateVector bell = bell_qe();
        expect(std::abs(entropy(reduced_density(bell, part)) - std::log(2.0)) < 1e-9,
               "reduced entropy != ln 2");
        expect(std::abs(mutual_information(bell, part) - 2.0 * std::log(2.0)) < 1e-9,
               "mutual information != 2 ln 2");
        expect(std::abs(separability_gap(bell, part) - std::sqrt(3.0) / 2.0) < 1e-9,
               "separability gap != sqrt(3)/2");
    });

    check("Born statistics over a seed battery", [&] {
        const QubitRegister reg({"asset"});
        const std::vector<SparseOperator> projectors = {
            qubit_projector(reg, "asset", true), qubit_projector(reg, "asset", false)};
        const StateVector mixed = asset_superposition(
            {cplx{std::sqrt(0.3), 0.0}, cplx{std::sqrt(0.7), 0.0}});
        std::size_t ups = 0;
        const std::size_t trials = 2000;
        for (std::size_t i = 0; i < trials; ++i) {
            if (measure(mixed, projectors, 5000 + i).outcome == 0) ++ups;
        }
        const double frequency = static_cast<double>(ups) / trials;
        expect(std::abs(frequency - 0.3) < 4.0 * std::sqrt(0.3 * 0.7 / trials),
               "frequency outside 4 sigma");
    });

    check("charge conservation along the QE preset", [&] {
        const ParseOutcome outcome = parse_scenario(preset_text("qe_pair_rabi"));
        expect(outcome.ok(), "preset failed validation");
        const RunResult result = run_scenario(*outcome.config);
        double lo = 1e300, hi = -1e300;
        std::size_t column = 0;
        while (result.series.names[column] != "charge") ++column;
        for (const auto& row : result.series.rows) {
            lo = std::min(lo, row[column]);
            hi = std::max(hi, row[column]);
        }
        expect(hi - lo < 1e-9, "charge drifted");
        expect(result.norm_drift < 1e-9, "norm drifted");
    });

    check("harmonic exciton ground state", [&] {
        const exciton1d::GridSpec grid{-10.0, 10.0, 800};
        const auto result = exciton1d::solve_eigen(
            grid, exciton1d::PotentialSpec::harmonic(1.0), 1.0, 1);
        expect(std::abs(result.energies[0] - 0.5) < 1e-2, "ground energy off");
    });

    check("deterministic exports", [&] {
        const ParseOutcome outcome = parse_scenario(preset_text("qe_pair_rabi"));
        expect(outcome.ok(), "preset failed validation");
        const std::string a =
            export_series(run_scenario(*outcome.config), ExportFormat::csv);
        const std::string b =
            export_series(run_scenario(*outcome.config), ExportFormat::csv);
        expect(a == b, "CSV exports differ between runs");
    });

    if (failures == 0) {
        std::cout << "selftest: all checks passed\n";
        return exit_ok;
    }
    std::cout << "selftest: " << failures << " check(s) failed\n";
    return exit_numerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock-space simulator for money-debt pair dynamics"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", format, preset_name;

    CLI::App* run = app.add_subcommand("run", "Run a scenario and export its series");
    run->add_option("config", config_path, "scenario config file")->required();
    run->add_option("--out", out_dir, "output directory (default .)");
    run->add_option("--format", format, "restrict export to one format")
        ->check(CLI::IsMember({"csv", "jsonl"}));

    CLI::App* validate = app.add_subcommand("validate", "Validate a scenario config");
    validate->add_option("config", config_path, "scenario config file")->required();

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Eigenvalues of the static Hamiltonian");
    spectrum->add_option("config", config_path, "scenario config file")->required();

    CLI::App* exciton =
        app.add_subcommand("exciton1d", "Solve the 1-D bound-pair eigenproblem");
    exciton->add_option("config", config_path, "solver config file")->required();

    CLI::App* presets = app.add_subcommand("presets", "List or show shipped scenarios");
    presets->require_subcommand(1);
    CLI::App* presets_list = presets->add_subcommand("list", "List preset names");
    CLI::App* presets_show = presets->add_subcommand("show", "Print a preset config");
    presets_show->add_option("name", preset_name, "preset name")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "Run the invariant battery");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir, format);
        if (validate->parsed()) return cmd_validate(config_path);
        if (spectrum->parsed()) return cmd_spectrum(config_path);
        if (exciton->parsed()) return cmd_exciton1d(config_path);
        if (presets->parsed()) {
            if (presets_list->parsed()) return cmd_presets_list();
            if (presets_show->parsed()) return cmd_presets_show(preset_name);
        }
        if (selftest->parsed()) return cmd_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::parse_error:
            case errc::validation_error:
            case errc::unknown_label:
                return exit_validation;
            case errc::io_error:
                return exit_io;
            default:
                return exit_numerical;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_ok;
}
