// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "econofock/scenario.hpp"

namespace econofock {

namespace {

std::string fmt17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

SparseOperator term_operator(const FockBasis& basis, const ModeEnergies& energies,
                             const TermSpec& term) {
    switch (term.type) {
        case TermSpec::Type::free:
            return h_free(basis, energies);
        case TermSpec::Type::qe:
            return h_qe(basis, term.amplitude, term.pairs);
        case TermSpec::Type::exciton:
            return h_binding(basis, term.coupling);
        case TermSpec::Type::viol:
            return h_viol(basis, term.viol);
        case TermSpec::Type::exchange: {
            SparseOperator sum = SparseOperator::zero(basis.dim(), BasisTag{basis.tag()});
            for (const auto& [i, j] : term.swaps) {
                sum = add(sum, exchange(basis, i, j));
            }
            return scale(cplx{term.amplitude, 0.0}, sum);
        }
        case TermSpec::Type::perturb:
            break;  // time-dependent; handled by the perturbation builder
    }
    return SparseOperator::zero(basis.dim(), BasisTag{basis.tag()});
}

StateVector build_initial_state(const ScenarioConfig& config, const FockBasis* basis,
                                const QubitRegister* reg) {
    const InitialStateSpec& spec = config.initial_state;
    switch (spec.kind) {
        case InitialStateSpec::Kind::vacuum:
            return vacuum(*basis);
        case InitialStateSpec::Kind::qe_pair:
            return qe_pair(*basis, spec.money_mode, spec.debt_mode);
        case InitialStateSpec::Kind::loan_pair:
            return loan_pair(*basis, spec.money_mode, spec.debt_mode);
        case InitialStateSpec::Kind::single_money: {
            OccupationState occ{0, basis->total_modes()};
            occ = occ.with_bit(basis->position(money_mode(spec.mode)), true);
            return basis_state(*basis, occ);
        }
        case InitialStateSpec::Kind::basis_state:
            return basis_state(*basis, OccupationState::from_string(spec.occupation));
        case InitialStateSpec::Kind::asset_superposition:
            return asset_superposition({spec.a, spec.b});
        case InitialStateSpec::Kind::bell_qe:
            return bell_qe();
        case InitialStateSpec::Kind::register_state:
            return register_state(*reg, spec.pattern);
    }
    fail(errc::validation_error, "unreachable initial state kind");
}

std::string amplitude_label(const ScenarioConfig& config, const FockBasis* basis,
                            std::size_t index) {
    if (basis) return basis->occupation_of(index).to_string();
    std::string label(config.qubits.size(), 'u');
    for (std::size_t p = 0; p < config.qubits.size(); ++p) {
        if ((index >> (config.qubits.size() - 1 - p)) & 1u) label[p] = 'd';
    }
    return label;
}

}  // namespace

SparseOperator assemble_static_hamiltonian(const ScenarioConfig& config) {
    if (config.is_register) {
        const QubitRegister reg(config.qubits);
        return SparseOperator::zero(reg.dim(), BasisTag{reg.tag()});
    }
    const FockBasis basis = build_basis(config.money_modes, config.debt_modes,
                                        config.sector);
    SparseOperator h = SparseOperator::zero(basis.dim(), BasisTag{basis.tag()});
    for (const TermSpec& term : config.terms) {
        if (term.type == TermSpec::Type::perturb) continue;
        h = add(h, term_operator(basis, config.energies, term));
    }
    return h;
}

namespace {

RunResult run_scenario_impl(const ScenarioConfig& config);

}  // namespace

RunResult run_scenario(const ScenarioConfig& config) {
    try {
        return run_scenario_impl(config);
    } catch (const Error& e) {
        throw Error(e.code(), "scenario '" + config.name + "': " + e.what());
    }
}

namespace {

RunResult run_scenario_impl(const ScenarioConfig& config) {
    std::optional<FockBasis> basis;
    std::optional<QubitRegister> reg;
    if (config.is_register) {
        reg.emplace(config.qubits);
    } else {
        basis = build_basis(config.money_modes, config.debt_modes, config.sector);
    }

    const SparseOperator static_part = assemble_static_hamiltonian(config);

    // Collect the time-dependent profit/interest terms into one builder.
    std::vector<const TermSpec*> perturb_terms;
    for (const TermSpec& term : config.terms) {
        if (term.type == TermSpec::Type::perturb) perturb_terms.push_back(&term);
    }
    PerturbationBuilder perturbation;
    if (!perturb_terms.empty()) {
        const FockBasis& b = *basis;
        perturbation = [&b, perturb_terms](double t) {
            SparseOperator v = SparseOperator::zero(b.dim(), BasisTag{b.tag()});
            for (const TermSpec* term : perturb_terms) {
                v = add(v, v_perturb(b, term->profit, term->interest, t));
            }
            return v;
        };
    }

    const StateVector psi0 = build_initial_state(config, basis ? &*basis : nullptr,
                                                 reg ? &*reg : nullptr);

    // Observable evaluators, one per requested column.
    ObservableSet observables;
    observables.names = config.observables;
    const auto energy_of = [&static_part, &perturbation](double t, const StateVector& psi) {
        double e = expectation_real(static_part, psi);
        if (perturbation) e += expectation_real(perturbation(t), psi);
        return e;
    };
    for (const std::string& name : config.observables) {
        if (name == "norm") {
            observables.evaluators.emplace_back(
                [](double, const StateVector& psi) { return psi.norm(); });
        } else if (name == "energy") {
            observables.evaluators.emplace_back(energy_of);
        } else if (name == "charge") {
            observables.evaluators.emplace_back(
                [](double, const StateVector& psi) { return charge(psi); });
        } else if (name == "exciton_count") {
            observables.evaluators.emplace_back(
                [](double, const StateVector& psi) { return exciton_count(psi); });
        } else if (name == "n_money" || name == "n_debt") {
            SparseOperator op = total_number(
                *basis, name == "n_money" ? Species::money : Species::debt);
            observables.evaluators.emplace_back(
                [op = std::move(op)](double, const StateVector& psi) {
                    return expectation_real(op, psi);
                });
        } else if (name.rfind("n_money_", 0) == 0) {
            const std::size_t k = std::stoul(name.substr(8));
            SparseOperator op = number(*basis, money_mode(k));
            observables.evaluators.emplace_back(
                [op = std::move(op)](double, const StateVector& psi) {
                    return expectation_real(op, psi);
                });
        } else if (name.rfind("n_debt_", 0) == 0) {
            const std::size_t q = std::stoul(name.substr(7));
            SparseOperator op = number(*basis, debt_mode(q));
            observables.evaluators.emplace_back(
                [op = std::move(op)](double, const StateVector& psi) {
                    return expectation_real(op, psi);
                });
        } else if (name == "entropy_money") {
            Partition part = money_vs_debt(*basis);
            observables.evaluators.emplace_back(
                [part](double, const StateVector& psi) {
                    return entropy(reduced_density(psi, part));
                });
        } else if (name == "mutual_information" || name == "separability_gap") {
            Partition part;
            if (config.is_register) {
                const std::vector<std::string> first = {config.qubits.front()};
                part = qubit_partition(*reg, first);
            } else {
                part = money_vs_debt(*basis);
            }
            const bool is_mi = name == "mutual_information";
            observables.evaluators.emplace_back(
                [part, is_mi](double, const StateVector& psi) {
                    return is_mi ? mutual_information(psi, part)
                                 : separability_gap(psi, part);
                });
        } else if (name.rfind("prob_up_", 0) == 0) {
            SparseOperator op = qubit_projector(*reg, name.substr(8), true);
            observables.evaluators.emplace_back(
                [op = std::move(op)](double, const StateVector& psi) {
                    return expectation_real(op, psi);
                });
        } else if (name.rfind("entropy_", 0) == 0) {
            const std::vector<std::string> labels = {name.substr(8)};
            Partition part = qubit_partition(*reg, labels);
            observables.evaluators.emplace_back(
                [part](double, const StateVector& psi) {
                    return entropy(reduced_density(psi, part));
                });
        } else {
            fail(errc::validation_error, "unhandled observable '" + name + "'");
        }
    }

    // Repayment events map to node interventions: the first grid node at or
    // after the configured time.
    std::vector<Intervention> interventions;
    for (const EventSpec& event : config.events) {
        const double dt = config.grid.dt();
        const double offset = (event.time - config.grid.t_start) / dt;
        const std::size_t node = static_cast<std::size_t>(
            std::min(static_cast<double>(config.grid.n_steps),
                     std::max(0.0, std::ceil(offset - 1e-9))));
        const SparseOperator recombine =
            pair_creation(*basis, event.money_mode, event.debt_mode).adjoint();
        interventions.push_back(
            {node, [recombine](const StateVector& psi) {
                 std::vector<cplx> repaid = recombine.apply(psi.amplitudes);
                 const double n = kernels::norm2(repaid);
                 if (n * n < 1e-24) {
                     fail(errc::zero_probability_collapse,
                          "repayment applied to a state with no matching pair");
                 }
                 for (cplx& x : repaid) x /= n;
                 return StateVector{std::move(repaid), psi.tag};
             }});
    }

    RunResult result;
    result.series.names = observables.names;
    result.series.times.reserve(config.grid.n_steps + 1);
    result.series.rows.reserve(config.grid.n_steps + 1);

    const StepObserver observer = [&](std::size_t, double t, const StateVector& psi) {
        result.series.times.push_back(t);
        std::vector<double> row;
        row.reserve(observables.evaluators.size());
        for (const auto& eval : observables.evaluators) {
            row.push_back(eval(t, psi));
        }
        result.series.rows.push_back(std::move(row));
    };

    EvolutionReport report = evolve_scheduled(static_part, perturbation, psi0,
                                              config.grid, observer, interventions);

    // Final-state summary.
    const StateVector& final_state = report.final_state;
    std::vector<std::size_t> order(final_state.dim());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double pa = std::norm(final_state.amplitudes[a]);
        const double pb = std::norm(final_state.amplitudes[b]);
        return pa != pb ? pa > pb : a < b;
    });
    for (std::size_t rank = 0; rank < std::min<std::size_t>(5, order.size()); ++rank) {
        const std::size_t idx = order[rank];
        const double p = std::norm(final_state.amplitudes[idx]);
        if (p < 1e-12) break;
        result.leading_amplitudes.push_back(
            {amplitude_label(config, basis ? &*basis : nullptr, idx),
             final_state.amplitudes[idx], p});
    }
    if (!config.is_register) {
        result.final_charge = charge(final_state);
        result.final_exciton_count = exciton_count(final_state);
        if (config.money_modes >= 1 && config.debt_modes >= 1) {
            const Partition part = money_vs_debt(*basis);
            result.final_entropy = entropy(reduced_density(final_state, part));
            result.final_mutual_information = mutual_information(final_state, part);
            result.final_separability_gap = separability_gap(final_state, part);
        }
    } else if (config.qubits.size() >= 2) {
        const std::vector<std::string> first = {config.qubits.front()};
        const Partition part = qubit_partition(*reg, first);
        result.final_entropy = entropy(reduced_density(final_state, part));
        result.final_mutual_information = mutual_information(final_state, part);
        result.final_separability_gap = separability_gap(final_state, part);
    }

    if (config.measure) {
        const std::vector<SparseOperator> projectors = {
            qubit_projector(*reg, config.measure->target, true),
            qubit_projector(*reg, config.measure->target, false)};
        std::mt19937_64 master(config.seed);
        MeasurementSummary summary;
        summary.target = config.measure->target;
        summary.trials = config.measure->trials;
        std::size_t ups = 0;
        for (std::size_t trial = 0; trial < config.measure->trials; ++trial) {
            const std::uint64_t trial_seed = master();
            const MeasurementOutcome outcome = measure(final_state, projectors, trial_seed);
            if (trial == 0) summary.first_outcome = outcome.outcome;
            if (outcome.outcome == 0) ++ups;
        }
        summary.frequency_up = static_cast<double>(ups) /
                               static_cast<double>(config.measure->trials);
        result.measurement = summary;
    }

    result.name = config.name;
    result.config_hash = config.config_hash;
    result.seed = config.seed;
    result.version = engine_version;
    result.generator = measurement_generator;
    result.norm_drift = report.norm_drift;
    return result;
}

}  // namespace

std::string export_series(const RunResult& result, ExportFormat format) {
    if (format == ExportFormat::csv) {
        std::string out = "t";
        for (const std::string& name : result.series.names) {
            out += "," + name;
        }
        out += "\n";
        for (std::size_t row = 0; row < result.series.rows.size(); ++row) {
            out += fmt17(result.series.times[row]);
            for (double value : result.series.rows[row]) {
                out += ",";
                out += fmt17(value);
            }
            out += "\n";
        }
        return out;
    }
    if (format == ExportFormat::json_lines) {
        nlohmann::ordered_json meta;
        meta["name"] = result.name;
        meta["config_hash"] = result.config_hash;
        meta["seed"] = result.seed;
        meta["schema_version"] = scenario_schema_version;
        meta["version"] = result.version;
        meta["generator"] = result.generator;
        meta["norm_drift"] = result.norm_drift;
        meta["columns"] = result.series.names;
        nlohmann::ordered_json final_summary;
        nlohmann::ordered_json leading = nlohmann::ordered_json::array();
        for (const auto& amp : result.leading_amplitudes) {
            leading.push_back({{"state", amp.label},
                               {"re", amp.value.real()},
                               {"im", amp.value.imag()},
                               {"probability", amp.probability}});
        }
        final_summary["leading_amplitudes"] = std::move(leading);
        if (result.final_charge) final_summary["charge"] = *result.final_charge;
        if (result.final_exciton_count) {
            final_summary["exciton_count"] = *result.final_exciton_count;
        }
        if (result.final_entropy) final_summary["entropy"] = *result.final_entropy;
        if (result.final_mutual_information) {
            final_summary["mutual_information"] = *result.final_mutual_information;
        }
        if (result.final_separability_gap) {
            final_summary["separability_gap"] = *result.final_separability_gap;
        }
        if (result.measurement) {
            final_summary["measurement"] = {
                {"target", result.measurement->target},
                {"trials", result.measurement->trials},
                {"frequency_up", result.measurement->frequency_up},
                {"first_outcome", result.measurement->first_outcome == 0 ? "up" : "down"}};
        }
        meta["final"] = std::move(final_summary);

        std::string out = meta.dump() + "\n";
        for (std::size_t row = 0; row < result.series.rows.size(); ++row) {
            nlohmann::ordered_json line;
            line["t"] = result.series.times[row];
            for (std::size_t c = 0; c < result.series.names.size(); ++c) {
                line[result.series.names[c]] = result.series.rows[row][c];
            }
            out += line.dump() + "\n";
        }
        return out;
    }
    fail(errc::unsupported_format, "unknown export format");
}

}  // namespace econofock
