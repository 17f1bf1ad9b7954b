// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one check per release criterion, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "econofock/eigh.hpp"
#include "econofock/evolve.hpp"
#include "econofock/scenario.hpp"

using namespace econofock;

namespace {

std::size_t g_failures = 0;

void criterion(int number, const char* title, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[PASS] %2d  %-58s (%.2f s)\n", number, title, seconds);
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("[FAIL] %2d  %-58s %s\n", number, title, e.what());
    }
}

void expect(bool condition, const std::string& detail) {
    if (!condition) throw std::runtime_error(detail);
}

ScenarioConfig load_preset(const std::string& name) {
    const ParseOutcome outcome = parse_scenario(preset_text(name));
    expect(outcome.ok(), "preset '" + name + "' failed validation");
    return *outcome.config;
}

std::size_t column_of(const TimeSeries& series, const std::string& name) {
    const auto it = std::find(series.names.begin(), series.names.end(), name);
    expect(it != series.names.end(), "missing column " + name);
    return static_cast<std::size_t>(it - series.names.begin());
}

double column_drift(const TimeSeries& series, std::size_t column, std::size_t first_row,
                    std::size_t last_row) {
    double lo = 1e300, hi = -1e300;
    for (std::size_t row = first_row; row <= last_row; ++row) {
        lo = std::min(lo, series.rows[row][column]);
        hi = std::max(hi, series.rows[row][column]);
    }
    return hi - lo;
}

// --- criterion bodies -----------------------------------------------------

void algebra_suite() {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t m = 0; m <= 6; ++m) {
        for (std::size_t d = 0; m + d <= 6; ++d) {
            if (m + d == 0) continue;
            const FockBasis basis = build_basis(m, d);
            const SparseOperator id =
                SparseOperator::identity(basis.dim(), BasisTag{basis.tag()});
            const SparseOperator zero =
                SparseOperator::zero(basis.dim(), BasisTag{basis.tag()});

            std::vector<ModeId> modes;
            for (std::size_t k = 0; k < m; ++k) modes.push_back(money_mode(k));
            for (std::size_t q = 0; q < d; ++q) modes.push_back(debt_mode(q));

            for (const ModeId& a : modes) {
                const SparseOperator c_a = annihilation(basis, a);
                const SparseOperator cdag_a = creation(basis, a);
                expect(max_abs_diff(number(basis, a), multiply(cdag_a, c_a)) <= 1e-12,
                       "number != creation * annihilation");
                for (const ModeId& b : modes) {
                    const SparseOperator cdag_b = creation(basis, b);
                    const SparseOperator c_b = annihilation(basis, b);
                    const SparseOperator mixed =
                        add(multiply(c_a, cdag_b), multiply(cdag_b, c_a));
                    expect(max_abs_diff(mixed, a == b ? id : zero) <= 1e-12,
                           "{c_a, c_b^dag} != delta_ab");
                    const SparseOperator lowering =
                        add(multiply(c_a, c_b), multiply(c_b, c_a));
                    expect(max_abs_diff(lowering, zero) <= 1e-12, "{c_a, c_b} != 0");
                    if (!(a == b)) {
                        const SparseOperator p = exchange(basis, a, b);
                        expect(max_abs_diff(multiply(p, p), id) <= 1e-12,
                               "exchange^2 != I");
                    }
                }
            }
        }
    }
    for (const auto& labels :
         {std::vector<std::string>{"asset"},
          std::vector<std::string>{"money_valuation", "bond_valuation"}}) {
        const QubitRegister reg(labels);
        for (const std::string& label : labels) {
            const SparseOperator x = sigma_x(reg, label);
            expect(max_abs_diff(multiply(x, x),
                                SparseOperator::identity(reg.dim(),
                                                         BasisTag{reg.tag()})) <= 1e-12,
                   "sigma_x^2 != I");
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < 10.0, "algebra suite exceeded 10 s");
}

void conservation_suite() {
    const auto start = std::chrono::steady_clock::now();
    for (const std::string& name : preset_names()) {
        ScenarioConfig config = load_preset(name);
        config.grid = {0.0, 10.0, 5000};
        config.observables = config.is_register
                                 ? std::vector<std::string>{"energy", "norm"}
                                 : std::vector<std::string>{"charge", "energy", "norm"};
        const RunResult result = run_scenario(config);
        expect(result.norm_drift < 1e-9,
               name + ": norm drift " + std::to_string(result.norm_drift));

        const std::size_t last = result.series.rows.size() - 1;
        if (!config.is_register) {
            const double drift =
                column_drift(result.series, column_of(result.series, "charge"), 0, last);
            expect(drift < 1e-9, name + ": charge drift " + std::to_string(drift));
        }

        const bool is_static = std::none_of(
            config.terms.begin(), config.terms.end(),
            [](const TermSpec& t) { return t.type == TermSpec::Type::perturb; });
        if (is_static) {
            // Repayment events are instantaneous interventions; energy is
            // conserved within each segment between them.
            std::vector<std::size_t> boundaries = {0};
            for (const EventSpec& event : config.events) {
                const double offset =
                    (event.time - config.grid.t_start) / config.grid.dt();
                boundaries.push_back(
                    static_cast<std::size_t>(std::ceil(offset - 1e-9)));
            }
            boundaries.push_back(last);
            std::sort(boundaries.begin(), boundaries.end());
            const std::size_t energy = column_of(result.series, "energy");
            for (std::size_t s = 0; s + 1 < boundaries.size(); ++s) {
                const std::size_t from = boundaries[s];
                const std::size_t to =
                    boundaries[s + 1] == last ? last : boundaries[s + 1] - 1;
                if (from >= to) continue;
                const double drift = column_drift(result.series, energy, from, to);
                expect(drift < 1e-9, name + ": energy drift " + std::to_string(drift));
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < 60.0, "conservation suite exceeded 60 s");
}

void particle_hole_symmetry() {
    for (std::size_t m : {1u, 2u, 3u}) {
        std::vector<double> energies;
        for (std::size_t k = 0; k < m; ++k) {
            energies.push_back(0.23 + 0.31 * static_cast<double>(k));
        }
        const FockBasis basis = build_basis(m, m);
        const SparseOperator h = h_free(basis, ModeEnergies::symmetric(energies));
        const EighResult eig = eigh(h.to_dense(), basis.dim(), false);
        const std::size_t n = eig.eigenvalues.size();
        for (std::size_t i = 0; i < n; ++i) {
            expect(std::abs(eig.eigenvalues[i] + eig.eigenvalues[n - 1 - i]) <= 1e-10,
                   "spectrum not symmetric about zero at M=D=" + std::to_string(m));
        }
    }
}

void qe_rabi_oracle() {
    const ScenarioConfig config = load_preset("qe_pair_rabi");
    const RunResult result = run_scenario(config);
    const std::size_t money = column_of(result.series, "n_money");
    for (std::size_t row = 0; row < result.series.rows.size(); ++row) {
        const double t = result.series.times[row];
        const double expected = std::sin(t) * std::sin(t);
        expect(std::abs(result.series.rows[row][money] - expected) < 1e-6,
               "n_money(t) missed sin^2(t) at t = " + std::to_string(t));
    }
}

void entanglement_values() {
    const QubitRegister reg(bell_qe_labels());
    const std::vector<std::string> first = {"money_valuation"};
    const Partition part = qubit_partition(reg, first);

    const StateVector bell = bell_qe();
    expect(std::abs(entropy(reduced_density(bell, part)) - std::log(2.0)) <= 1e-9,
           "Bell reduced entropy != ln 2");
    expect(std::abs(mutual_information(bell, part) - 2.0 * std::log(2.0)) <= 1e-9,
           "Bell mutual information != 2 ln 2");
    expect(std::abs(separability_gap(bell, part) - std::sqrt(3.0) / 2.0) <= 1e-9,
           "Bell separability gap != sqrt(3)/2");

    std::vector<StateVector> products;
    for (const std::string& pattern : {"uu", "ud", "du", "dd"}) {
        products.push_back(register_state(reg, pattern));
    }
    // A separable superposition: |+> x |+>.
    products.push_back(StateVector::normalized(
        {cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{0.5, 0.0}},
        BasisTag{reg.tag()}));
    for (const StateVector& product : products) {
        expect(entropy(reduced_density(product, part)) < 1e-10,
               "product state has entropy");
        expect(mutual_information(product, part) < 1e-10,
               "product state has mutual information");
        expect(separability_gap(product, part) < 1e-10, "product state has a gap");
    }
}

void collapse_statistics() {
    const QubitRegister reg({"asset"});
    const std::vector<SparseOperator> projectors = {
        qubit_projector(reg, "asset", true), qubit_projector(reg, "asset", false)};
    const StateVector mixed =
        asset_superposition({cplx{std::sqrt(0.3), 0.0}, cplx{std::sqrt(0.7), 0.0}});

    const std::size_t trials = 10000;
    std::size_t ups = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const MeasurementOutcome outcome = measure(mixed, projectors, 20240808 + i);
        if (outcome.outcome == 0) ++ups;
        const MeasurementOutcome repeat =
            measure(outcome.collapsed, projectors, 777000 + i);
        expect(repeat.outcome == outcome.outcome, "repeated measurement flipped");
    }
    const double frequency = static_cast<double>(ups) / static_cast<double>(trials);
    expect(std::abs(frequency - 0.3) <= 0.014,
           "money frequency " + std::to_string(frequency) + " outside 0.3 +- 0.014");
}

void perturbation_phase_oracle() {
    const FockBasis basis = build_basis(1, 1);
    const SparseOperator at_zero =
        v_perturb(basis, Schedule::linear_ramp(0.1), Schedule::linear_ramp(0.2), 0.0);
    expect(at_zero.nonzeros() == 0, "v_perturb(0) is not exactly the zero operator");

    const StateVector pair = basis_state(basis, OccupationState::from_string("11"));
    const PerturbationBuilder builder = [&basis](double t) {
        return v_perturb(basis, Schedule::linear_ramp(0.1), Schedule::linear_ramp(0.2),
                         t);
    };
    const SparseOperator zero = SparseOperator::zero(4, BasisTag{basis.tag()});
    const EvolutionReport report =
        evolve_scheduled(zero, builder, pair, TimeGrid{0.0, 2.0, 10000});
    const cplx expected = std::exp(cplx{0.0, -0.15 * 2.0 * 2.0});
    expect(std::abs(report.final_state.amplitudes[3] - expected) < 1e-6,
           "accumulated phase missed 0.15 t^2");
}

void informal_monotonicity() {
    const FockBasis basis = build_basis(1, 1);
    const ModeEnergies energies = ModeEnergies::symmetric({1.0});
    const CouplingMatrix u = CouplingMatrix::uniform(1, 1, cplx{0.5, 0.0});
    const std::vector<Schedule> profit = {Schedule::linear_ramp(0.05)};
    const std::vector<Schedule> interest = {Schedule::linear_ramp(0.1)};
    const double g = 1.3;

    ViolationSpec base;
    base.delta_pr = 0.0;
    base.g_viol = g;
    const SparseOperator h0 = h_informal(basis, energies, u, base, profit, interest, 0.0);
    const double e0 = h0.entry(3, 3).real();

    for (double delta : {0.5, 1.0, 2.0, 4.0}) {
        ViolationSpec spec = base;
        spec.delta_pr = delta;
        const SparseOperator h =
            h_informal(basis, energies, u, spec, profit, interest, 0.0);
        const double shift = h.entry(3, 3).real() - e0;
        expect(std::abs(shift - g * delta) <= 1e-12,
               "pair energy shift is not g * delta_pr at delta = " +
                   std::to_string(delta));
    }

    // delta_pr = 0 reproduces the violation-free spectrum.
    const SparseOperator without = h_exciton(basis, energies, u);
    const EighResult a = eigh(h0.to_dense(), 4, false);
    const EighResult b = eigh(without.to_dense(), 4, false);
    for (std::size_t i = 0; i < 4; ++i) {
        expect(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) <= 1e-12,
               "delta_pr = 0 spectrum deviates");
    }
}

void exciton_solver() {
    const auto start = std::chrono::steady_clock::now();

    const exciton1d::GridSpec grid{-10.0, 10.0, 2000};
    const exciton1d::EigenResult harmonic =
        exciton1d::solve_eigen(grid, exciton1d::PotentialSpec::harmonic(1.0), 1.0, 6);
    for (std::size_t n = 0; n < 6; ++n) {
        expect(std::abs(harmonic.energies[n] - (static_cast<double>(n) + 0.5)) < 1e-3,
               "harmonic level " + std::to_string(n) + " off");
    }

    const double length = 2.0;
    const exciton1d::GridSpec box_grid{-1.0, 1.0, 2000};
    const exciton1d::EigenResult box = exciton1d::solve_eigen(
        box_grid, exciton1d::PotentialSpec::tabulated(std::vector<double>(2000, 0.0)),
        1.0, 5);
    for (std::size_t n = 0; n < 5; ++n) {
        const double k = static_cast<double>(n + 1) * std::numbers::pi / length;
        const double exact = 0.5 * k * k;
        expect(std::abs(box.energies[n] - exact) / exact < 1e-3,
               "box level " + std::to_string(n) + " off");
    }

    const auto ground_error = [](std::size_t n_points) {
        const exciton1d::GridSpec g{-10.0, 10.0, n_points};
        return std::abs(
            exciton1d::solve_eigen(g, exciton1d::PotentialSpec::harmonic(1.0), 1.0, 1)
                .energies[0] -
            0.5);
    };
    const double ratio = ground_error(251) / ground_error(501);
    expect(ratio > 3.0 && ratio < 5.0,
           "refinement ratio " + std::to_string(ratio) + " not about 4");

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < 10.0, "exciton solver suite exceeded 10 s");
}

void reproducibility() {
    for (const std::string& name : preset_names()) {
        const ScenarioConfig config = load_preset(name);
        const RunResult first = run_scenario(config);
        const RunResult second = run_scenario(config);
        expect(export_series(first, ExportFormat::csv) ==
                   export_series(second, ExportFormat::csv),
               name + ": CSV exports differ");
        expect(export_series(first, ExportFormat::json_lines) ==
                   export_series(second, ExportFormat::json_lines),
               name + ": JSON-lines exports differ");
    }

    std::string bad = preset_text("qe_pair_rabi");
    const std::size_t at = bad.find("\"terms\": [");
    expect(at != std::string::npos, "preset text changed unexpectedly");
    bad.insert(at + 10,
               "\n    {\"type\": \"perturb\", \"profit\": {\"kind\": \"linear_ramp\", "
               "\"slope\": 0.0}, \"interest\": {\"kind\": \"constant\", \"value\": "
               "0.1}},");
    const ParseOutcome outcome = parse_scenario(bad);
    expect(!outcome.ok(), "constant 0.1 interest schedule was accepted");
    const bool cites_rule = std::any_of(
        outcome.issues.begin(), outcome.issues.end(), [](const ValidationIssue& issue) {
            return issue.message.find("value(0) = 0") != std::string::npos;
        });
    expect(cites_rule, "rejection does not cite the value(0) = 0 rule");
}

void integrator_order() {
    // The shipped QE preset is static, so the order measurement adds linear
    // profit/interest ramps on top of its Hamiltonian to give the midpoint
    // rule a genuine time dependence.
    const FockBasis basis = build_basis(1, 1);
    const std::vector<std::pair<std::size_t, std::size_t>> pairs = {{0, 0}};
    const SparseOperator h = h_qe(basis, 1.0, pairs);
    const PerturbationBuilder builder = [&basis](double t) {
        return v_perturb(basis, Schedule::linear_ramp(0.3), Schedule::linear_ramp(0.15),
                         t);
    };
    const StateVector vac = vacuum(basis);

    const auto final_at = [&](std::size_t steps) {
        return evolve_scheduled(h, builder, vac, TimeGrid{0.0, 2.0, steps}).final_state;
    };
    const StateVector reference = final_at(1600);  // dt/16 of the coarsest run
    const auto error_of = [&](const StateVector& psi) {
        double sum = 0.0;
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            sum += std::norm(psi.amplitudes[i] - reference.amplitudes[i]);
        }
        return std::sqrt(sum);
    };

    const double e1 = error_of(final_at(100));
    const double e2 = error_of(final_at(200));
    const double e4 = error_of(final_at(400));
    for (const double ratio : {e1 / e2, e2 / e4}) {
        expect(ratio >= 3.5 && ratio <= 4.5,
               "halving dt changed the error by " + std::to_string(ratio));
    }
}

}  // namespace

int main() {
    std::printf("acceptance criteria\n");
    criterion(1, "algebra suite (CAR, involutions, number identity)", algebra_suite);
    criterion(2, "conservation suite over the preset library", conservation_suite);
    criterion(3, "particle-hole symmetric spectra", particle_hole_symmetry);
    criterion(4, "QE Rabi closed form", qe_rabi_oracle);
    criterion(5, "entanglement values (Bell and product states)", entanglement_values);
    criterion(6, "seeded collapse statistics", collapse_statistics);
    criterion(7, "perturbation phase oracle", perturbation_phase_oracle);
    criterion(8, "informal-lending monotonicity", informal_monotonicity);
    criterion(9, "1-D exciton solver spectra", exciton_solver);
    criterion(10, "byte-identical exports and schedule rejection", reproducibility);
    criterion(11, "second-order integrator convergence", integrator_order);

    if (g_failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %zu criteria FAILED\n", g_failures);
    return 1;
}
