// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "econofock/hamiltonian.hpp"
#include "econofock/observe.hpp"

using namespace econofock;

namespace {

// Independent 4x4 oracle: explicit density matrices and a hand-rolled
// Frobenius distance, no shared code with the library path.
double oracle_gap_two_qubits(const std::vector<cplx>& amplitudes) {
    const std::size_t d = 4;
    std::vector<cplx> rho(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            rho[i * d + j] = amplitudes[i] * std::conj(amplitudes[j]);
        }
    }
    std::vector<cplx> rho_a(4, cplx{0, 0}), rho_b(4, cplx{0, 0});
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                rho_a[i * 2 + j] += rho[(i * 2 + k) * d + (j * 2 + k)];
                rho_b[i * 2 + j] += rho[(k * 2 + i) * d + (k * 2 + j)];
            }
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const cplx kron = rho_a[(i / 2) * 2 + (j / 2)] * rho_b[(i % 2) * 2 + (j % 2)];
            sum += std::norm(rho[i * d + j] - kron);
        }
    }
    return std::sqrt(sum);
}

StateVector two_qubit_state(std::vector<cplx> amplitudes) {
    const QubitRegister reg(bell_qe_labels());
    return StateVector::normalized(std::move(amplitudes), BasisTag{reg.tag()});
}

}  // namespace

TEST_CASE("expectation evaluates matrix elements") {
    const FockBasis basis = build_basis(1, 1);
    const StateVector pair = qe_pair(basis, 0, 0);
    CHECK(expectation_real(number(basis, money_mode(0)), pair) ==
          doctest::Approx(1.0).epsilon(1e-14));

    const StateVector vac = vacuum(basis);
    CHECK(std::abs(expectation(total_number(basis, Species::money), vac)) == 0.0);

    ViolationSpec spec;
    spec.delta_pr = 2.0;
    spec.g_viol = 1.5;
    CHECK(expectation_real(h_viol(basis, spec), pair) == doctest::Approx(3.0));

    const QubitRegister reg({"asset"});
    try {
        expectation(SparseOperator::identity(2, BasisTag{reg.tag()}), vac);
        FAIL("expected BasisMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == errc::basis_mismatch);
    }
}

TEST_CASE("reduced density of a product state is pure") {
    const StateVector ud = two_qubit_state({cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0}});
    const QubitRegister reg(bell_qe_labels());
    const std::vector<std::string> first = {"money_valuation"};
    const Partition part = qubit_partition(reg, first);

    const DensityMatrix rho = reduced_density(ud, part);
    CHECK(entropy(rho) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(rho.at(0, 0) - cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("reduced density of the Bell state is maximally mixed") {
    const QubitRegister reg(bell_qe_labels());
    const std::vector<std::string> first = {"money_valuation"};
    const Partition part = qubit_partition(reg, first);
    const DensityMatrix rho = reduced_density(bell_qe(), part);
    CHECK(std::abs(rho.at(0, 0) - cplx{0.5, 0.0}) < 1e-14);
    CHECK(std::abs(rho.at(1, 1) - cplx{0.5, 0.0}) < 1e-14);
    CHECK(std::abs(rho.at(0, 1)) < 1e-14);
    CHECK(entropy(rho) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("the bare pair state is occupancy-unentangled") {
    // A single Fock branch: tracing out the debt mode leaves a pure state.
    const FockBasis basis = build_basis(1, 1);
    const StateVector pair = qe_pair(basis, 0, 0);
    const Partition part = money_vs_debt(basis);
    CHECK(entropy(reduced_density(pair, part)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(separability_gap(pair, part) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("entropy evaluates the spectrum formula") {
    DensityMatrix rho;
    rho.dim = 2;
    rho.tag = BasisTag{QubitRegister({"asset"}).tag()};
    rho.entries = {cplx{0.3, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{0.7, 0.0}};
    const double expected = -0.3 * std::log(0.3) - 0.7 * std::log(0.7);
    CHECK(entropy(rho) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(entropy(rho) == doctest::Approx(0.6108643).epsilon(1e-6));

    rho.entries = {cplx{0.6, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{0.7, 0.0}};
    CHECK_THROWS_AS(entropy(rho), Error);  // trace != 1
}

TEST_CASE("Schmidt symmetry: both reduced entropies agree") {
    // Random-ish state on (2, 2) with interleaved partitions, where the
    // fermionic reordering signs matter. Amplitudes stay within one global
    // fermion parity, as every state generated by the model's Hamiltonians
    // does; the mode partial trace is exact there.
    const FockBasis basis = build_basis(2, 2);
    std::vector<cplx> amplitudes(basis.dim());
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        const OccupationState occ = basis.occupation_of(i);
        if (occ.total_occupied() % 2 != 0) continue;
        amplitudes[i] = cplx{std::sin(1.3 * static_cast<double>(i) + 0.4),
                             std::cos(0.7 * static_cast<double>(i))};
    }
    const StateVector psi = StateVector::normalized(amplitudes, basis.tag());

    for (const std::vector<std::size_t>& a :
         {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{0, 3},
          std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{2}}) {
        Partition part{a};
        Partition complement;
        for (std::size_t p = 0; p < 4; ++p) {
            if (std::find(a.begin(), a.end(), p) == a.end()) {
                complement.a_positions.push_back(p);
            }
        }
        const double s_a = entropy(reduced_density(psi, part));
        const double s_b = entropy(reduced_density(psi, complement));
        CHECK(std::abs(s_a - s_b) < 1e-9);
        CHECK(mutual_information(psi, part) ==
              doctest::Approx(2.0 * s_a).epsilon(1e-9));
    }
}

TEST_CASE("mutual information distinguishes product from entangled") {
    const QubitRegister reg(bell_qe_labels());
    const std::vector<std::string> first = {"money_valuation"};
    const Partition part = qubit_partition(reg, first);

    const StateVector product =
        two_qubit_state({cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0}});
    CHECK(mutual_information(product, part) < 1e-10);
    CHECK(mutual_information(bell_qe(), part) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-9));

    // A single qubit admits no bipartition.
    const StateVector lone = asset_superposition({cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    try {
        mutual_information(lone, Partition{{0}});
        FAIL("expected InvalidPartition");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_partition);
    }
}

TEST_CASE("separability gap matches the dense oracle") {
    const QubitRegister reg(bell_qe_labels());
    const std::vector<std::string> first = {"money_valuation"};
    const Partition part = qubit_partition(reg, first);

    const StateVector bell = bell_qe();
    CHECK(separability_gap(bell, part) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
    CHECK(separability_gap(bell, part) ==
          doctest::Approx(oracle_gap_two_qubits(bell.amplitudes)).epsilon(1e-12));

    const StateVector product =
        two_qubit_state({cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0}});
    CHECK(separability_gap(product, part) < 1e-10);

    const StateVector partial = two_qubit_state(
        {cplx{0, 0}, cplx{std::sqrt(0.9), 0}, cplx{std::sqrt(0.1), 0}, cplx{0, 0}});
    const double gap = separability_gap(partial, part);
    CHECK(gap == doctest::Approx(oracle_gap_two_qubits(partial.amplitudes)).epsilon(1e-12));
    CHECK(gap > 1e-3);
    CHECK(gap < std::sqrt(3.0) / 2.0);
}

TEST_CASE("gap and mutual information witness the same states") {
    const QubitRegister reg(bell_qe_labels());
    const std::vector<std::string> first = {"money_valuation"};
    const Partition part = qubit_partition(reg, first);
    const std::vector<StateVector> states = {
        two_qubit_state({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}}),
        two_qubit_state({cplx{0.5, 0}, cplx{0.5, 0}, cplx{0.5, 0}, cplx{0.5, 0}}),
        bell_qe(),
        two_qubit_state({cplx{0.6, 0}, cplx{0, 0.48}, cplx{0.4, 0}, cplx{0.2, 0.3}}),
    };
    for (const StateVector& psi : states) {
        const bool product_by_gap = separability_gap(psi, part) < 1e-9;
        const bool product_by_mi = mutual_information(psi, part) < 1e-9;
        CHECK(product_by_gap == product_by_mi);
    }
}

TEST_CASE("charge reads the money-debt imbalance") {
    const FockBasis basis = build_basis(1, 1);
    CHECK(charge(vacuum(basis)) == doctest::Approx(0.0));
    CHECK(charge(qe_pair(basis, 0, 0)) == doctest::Approx(0.0));

    const StateVector earned =
        basis_state(basis, OccupationState::from_string("10"));
    CHECK(charge(earned) == doctest::Approx(1.0));

    const StateVector lone = asset_superposition({cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    try {
        charge(lone);
        FAIL("expected WrongBasisKind");
    } catch (const Error& e) {
        CHECK(e.code() == errc::wrong_basis_kind);
    }
}

TEST_CASE("exciton count weighs min-pairing per branch") {
    const FockBasis basis = build_basis(1, 1);
    CHECK(exciton_count(vacuum(basis)) == doctest::Approx(0.0));
    CHECK(exciton_count(loan_pair(basis, 0, 0)) == doctest::Approx(1.0));

    const double r = 1.0 / std::sqrt(2.0);
    const StateVector mixed = StateVector::normalized(
        {cplx{0, 0}, cplx{0, 0}, cplx{r, 0}, cplx{r, 0}}, basis.tag());
    CHECK(exciton_count(mixed) == doctest::Approx(0.5));

    // Bounded by min(M, D) and invariant under same-species exchange.
    const FockBasis wide = build_basis(2, 2);
    const StateVector pair = qe_pair(wide, 0, 1);
    CHECK(exciton_count(pair) <= 2.0);
    const SparseOperator swap = exchange(wide, money_mode(0), money_mode(1));
    const StateVector swapped =
        StateVector::normalized(swap.apply(pair.amplitudes), pair.tag);
    CHECK(exciton_count(swapped) == doctest::Approx(exciton_count(pair)).epsilon(1e-12));
}

TEST_CASE("record_series samples every node of a trajectory") {
    const FockBasis basis = build_basis(1, 1);
    const std::vector<std::pair<std::size_t, std::size_t>> pairs = {{0, 0}};
    const SparseOperator h = h_qe(basis, 1.0, pairs);
    const TimeGrid grid{0.0, 1.0, 4};

    std::vector<StateVector> trajectory;
    const StepObserver observer = [&](std::size_t, double, const StateVector& psi) {
        trajectory.push_back(psi);
    };
    evolve_scheduled(h, nullptr, vacuum(basis), grid, observer);

    ObservableSet set;
    set.names = {"energy", "charge"};
    set.evaluators.push_back(
        [&h](double, const StateVector& psi) { return expectation_real(h, psi); });
    set.evaluators.push_back(
        [](double, const StateVector& psi) { return charge(psi); });

    const TimeSeries series = record_series(grid, set, trajectory);
    REQUIRE(series.rows.size() == 5);
    for (const auto& row : series.rows) {
        CHECK(std::abs(row[0] - series.rows[0][0]) < 1e-9);  // energy constant
        CHECK(std::abs(row[1]) < 1e-12);                     // charge conserved
    }
}
