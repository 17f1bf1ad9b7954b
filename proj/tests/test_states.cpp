// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "econofock/observe.hpp"
#include "econofock/states.hpp"

using namespace econofock;

TEST_CASE("vacuum is the unit amplitude on the empty pattern") {
    const FockBasis basis = build_basis(1, 1);
    const StateVector vac = vacuum(basis);
    CHECK(vac.amplitudes[0] == cplx{1.0, 0.0});
    CHECK(vac.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(expectation_real(total_number(basis, Species::money), vac) == 0.0);
    CHECK(expectation_real(total_number(basis, Species::debt), vac) == 0.0);

    try {
        vacuum(build_basis(2, 1, 1));
        FAIL("expected VacuumNotInSector");
    } catch (const Error& e) {
        CHECK(e.code() == errc::vacuum_not_in_sector);
    }
}

TEST_CASE("qe_pair is the phase-fixed pair over the vacuum") {
    const FockBasis basis = build_basis(1, 1);
    const StateVector pair = qe_pair(basis, 0, 0);
    // The raw pair amplitude is -1; the convention flips it to +1.
    CHECK(pair.amplitudes[3] == cplx{1.0, 0.0});
    CHECK(pair.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(charge(pair) == doctest::Approx(0.0));

    // Recombination returns the vacuum.
    const SparseOperator recombine = pair_creation(basis, 0, 0).adjoint();
    const StateVector back =
        StateVector::normalized(recombine.apply(pair.amplitudes), pair.tag);
    CHECK(std::abs(back.amplitudes[0]) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("loan_pair shares the qe_pair amplitudes") {
    const FockBasis basis = build_basis(2, 2);
    const StateVector loan = loan_pair(basis, 1, 0);
    const StateVector qe = qe_pair(basis, 1, 0);
    REQUIRE(loan.dim() == qe.dim());
    for (std::size_t i = 0; i < loan.dim(); ++i) {
        CHECK(loan.amplitudes[i] == qe.amplitudes[i]);
    }
    CHECK(exciton_count(loan) == doctest::Approx(1.0));
    CHECK(charge(loan) == doctest::Approx(0.0));
}

TEST_CASE("asset superposition carries the requested amplitudes") {
    const StateVector fiat = asset_superposition({cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    CHECK(fiat.amplitudes[0] == cplx{1.0, 0.0});
    CHECK(fiat.amplitudes[1] == cplx{0.0, 0.0});

    const double r = 1.0 / std::sqrt(2.0);
    const StateVector equal = asset_superposition({cplx{r, 0.0}, cplx{r, 0.0}});
    const QubitRegister reg({"asset"});
    const auto flipped = sigma_x(reg, "asset").apply(equal.amplitudes);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(flipped[i] - equal.amplitudes[i]) < 1e-15);
    }

    try {
        asset_superposition({cplx{1.0, 0.0}, cplx{0.5, 0.0}});
        FAIL("expected NotNormalized");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_normalized);
    }
}

TEST_CASE("bell_qe holds the two anti-correlated branches") {
    const StateVector bell = bell_qe();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(bell.amplitudes[0] == cplx{0.0, 0.0});
    CHECK(bell.amplitudes[1].real() == doctest::Approx(r));
    CHECK(bell.amplitudes[2].real() == doctest::Approx(r));
    CHECK(bell.amplitudes[3] == cplx{0.0, 0.0});
    CHECK(bell.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("register_state builds computational patterns") {
    const QubitRegister reg(bell_qe_labels());
    const StateVector ud = register_state(reg, "ud");
    CHECK(ud.amplitudes[1] == cplx{1.0, 0.0});
    CHECK_THROWS_AS(register_state(reg, "u"), Error);
    CHECK_THROWS_AS(register_state(reg, "ux"), Error);
}

TEST_CASE("measure is deterministic and collapses correctly") {
    const QubitRegister reg({"asset"});
    const std::vector<SparseOperator> projectors = {
        qubit_projector(reg, "asset", true), qubit_projector(reg, "asset", false)};

    // Pure fiat: outcome is always "up", any seed.
    const StateVector fiat = asset_superposition({cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 123456789ULL}) {
        const MeasurementOutcome outcome = measure(fiat, projectors, seed);
        CHECK(outcome.outcome == 0);
        CHECK(std::abs(outcome.collapsed.amplitudes[0]) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }

    // Identical triples give identical outcomes.
    const StateVector mixed =
        asset_superposition({cplx{std::sqrt(0.3), 0.0}, cplx{std::sqrt(0.7), 0.0}});
    const MeasurementOutcome first = measure(mixed, projectors, 777);
    const MeasurementOutcome second = measure(mixed, projectors, 777);
    CHECK(first.outcome == second.outcome);

    // Collapse idempotence: once collapsed, the outcome repeats surely.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const MeasurementOutcome outcome = measure(mixed, projectors, seed);
        const MeasurementOutcome again = measure(outcome.collapsed, projectors, seed + 1);
        CHECK(again.outcome == outcome.outcome);
    }
}

TEST_CASE("measurement statistics follow the Born rule") {
    const QubitRegister reg({"asset"});
    const std::vector<SparseOperator> projectors = {
        qubit_projector(reg, "asset", true), qubit_projector(reg, "asset", false)};
    const StateVector mixed =
        asset_superposition({cplx{std::sqrt(0.3), 0.0}, cplx{std::sqrt(0.7), 0.0}});

    const std::size_t trials = 2000;
    std::size_t ups = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        if (measure(mixed, projectors, 1000 + i).outcome == 0) ++ups;
    }
    const double frequency = static_cast<double>(ups) / static_cast<double>(trials);
    const double sigma = std::sqrt(0.3 * 0.7 / static_cast<double>(trials));
    CHECK(std::abs(frequency - 0.3) < 4.0 * sigma);
}

TEST_CASE("measuring one Bell qubit pins the other") {
    const QubitRegister reg(bell_qe_labels());
    const std::vector<SparseOperator> projectors = {
        qubit_projector(reg, "money_valuation", true),
        qubit_projector(reg, "money_valuation", false)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MeasurementOutcome outcome = measure(bell_qe(), projectors, seed);
        // Money up forces bond down (index 1); money down forces bond up (index 2).
        const std::size_t expected_index = outcome.outcome == 0 ? 1 : 2;
        CHECK(std::abs(outcome.collapsed.amplitudes[expected_index]) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("measure validates the projector family") {
    const QubitRegister reg({"asset"});
    const StateVector fiat = asset_superposition({cplx{1.0, 0.0}, cplx{0.0, 0.0}});

    const std::vector<SparseOperator> incomplete = {qubit_projector(reg, "asset", true)};
    try {
        measure(fiat, incomplete, 0);
        FAIL("expected IncompleteProjectors");
    } catch (const Error& e) {
        CHECK(e.code() == errc::incomplete_projectors);
    }

    // Halves of the identity sum to it but are not orthogonal projections.
    const SparseOperator half =
        scale(cplx{0.5, 0.0}, SparseOperator::identity(2, BasisTag{reg.tag()}));
    const std::vector<SparseOperator> overlapping = {half, half};
    try {
        measure(fiat, overlapping, 0);
        FAIL("expected IncompleteProjectors");
    } catch (const Error& e) {
        CHECK(e.code() == errc::incomplete_projectors);
    }
}
