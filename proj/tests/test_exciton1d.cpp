// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "econofock/exciton1d.hpp"

using namespace econofock;
using namespace econofock::exciton1d;

TEST_CASE("harmonic potential reproduces the analytic ladder") {
    const GridSpec grid{-10.0, 10.0, 2000};
    const EigenResult result = solve_eigen(grid, PotentialSpec::harmonic(1.0), 1.0, 6);
    for (std::size_t n = 0; n < 6; ++n) {
        CHECK(std::abs(result.energies[n] - (static_cast<double>(n) + 0.5)) < 1e-3);
    }
}

TEST_CASE("harmonic wavefunctions are orthonormal with the right node counts") {
    const GridSpec grid{-10.0, 10.0, 1200};
    const EigenResult result = solve_eigen(grid, PotentialSpec::harmonic(1.0), 1.0, 6);
    const double h = grid.spacing();

    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = a; b < 6; ++b) {
            double overlap = 0.0;
            for (std::size_t i = 0; i < grid.n_points; ++i) {
                overlap += result.wavefunctions[a][i] * result.wavefunctions[b][i];
            }
            overlap *= h;
            CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-8);
        }

        // Interior sign changes count the quantum number.
        std::size_t nodes = 0;
        double last = 0.0;
        for (std::size_t i = 1; i + 1 < grid.n_points; ++i) {
            const double value = result.wavefunctions[a][i];
            if (std::abs(value) < 1e-9) continue;
            if (last != 0.0 && value * last < 0.0) ++nodes;
            last = value;
        }
        CHECK(nodes == a);
    }
}

TEST_CASE("hard-wall box matches the closed-form spectrum") {
    const double length = 2.0;
    const GridSpec grid{-1.0, 1.0, 2000};
    const EigenResult result =
        solve_eigen(grid, PotentialSpec::tabulated(std::vector<double>(2000, 0.0)), 1.0, 4);
    for (std::size_t n = 0; n < 4; ++n) {
        const double k = static_cast<double>(n + 1) * std::numbers::pi / length;
        const double exact = 0.5 * k * k;
        CHECK(std::abs(result.energies[n] - exact) / exact < 1e-3);
    }
}

TEST_CASE("mass rescales the kinetic term") {
    const GridSpec grid{-1.0, 1.0, 800};
    const PotentialSpec free_potential =
        PotentialSpec::tabulated(std::vector<double>(800, 0.0));
    const EigenResult unit = solve_eigen(grid, free_potential, 1.0, 1);
    const EigenResult heavy = solve_eigen(grid, free_potential, 2.0, 1);
    CHECK(heavy.energies[0] == doctest::Approx(unit.energies[0] / 2.0).epsilon(1e-8));
}

TEST_CASE("halving the spacing divides the error by about four") {
    const auto ground_error = [](std::size_t n_points) {
        const GridSpec grid{-10.0, 10.0, n_points};
        const EigenResult result =
            solve_eigen(grid, PotentialSpec::harmonic(1.0), 1.0, 1);
        return std::abs(result.energies[0] - 0.5);
    };
    // n - 1 doubles so the spacing halves exactly.
    const double coarse = ground_error(251);
    const double fine = ground_error(501);
    CHECK(coarse / fine > 3.0);
    CHECK(coarse / fine < 5.0);
}

TEST_CASE("square well binds negative-energy states") {
    const GridSpec grid{-8.0, 8.0, 1600};
    const EigenResult result =
        solve_eigen(grid, PotentialSpec::square_well(5.0, 2.0), 1.0, 2);
    CHECK(result.energies[0] < 0.0);
    CHECK(result.energies[0] > -5.0);
    CHECK(result.energies[1] > result.energies[0]);
}

TEST_CASE("solver validates its inputs") {
    const GridSpec grid{-1.0, 1.0, 32};
    try {
        solve_eigen(grid, PotentialSpec::harmonic(1.0), 1.0, 31);
        FAIL("expected TooManyStates");
    } catch (const Error& e) {
        CHECK(e.code() == errc::too_many_states);
    }

    std::vector<double> bad(32, 0.0);
    bad[7] = std::numeric_limits<double>::infinity();
    try {
        solve_eigen(grid, PotentialSpec::tabulated(bad), 1.0, 1);
        FAIL("expected NonFinitePotential");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_finite_potential);
    }

    CHECK_THROWS_AS(solve_eigen(grid, PotentialSpec::tabulated({1.0, 2.0}), 1.0, 1),
                    Error);
    CHECK_THROWS_AS(solve_eigen(GridSpec{1.0, -1.0, 32}, PotentialSpec::harmonic(1.0),
                                1.0, 1),
                    Error);
    CHECK_THROWS_AS(solve_eigen(grid, PotentialSpec::harmonic(1.0), -1.0, 1), Error);
}

TEST_CASE("tabulated samples of a harmonic trap match the built-in") {
    const GridSpec grid{-6.0, 6.0, 600};
    std::vector<double> samples(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        const double x = grid.x_at(i);
        samples[i] = 0.5 * x * x;
    }
    const EigenResult direct = solve_eigen(grid, PotentialSpec::harmonic(1.0), 1.0, 3);
    const EigenResult tabulated =
        solve_eigen(grid, PotentialSpec::tabulated(samples), 1.0, 3);
    for (std::size_t n = 0; n < 3; ++n) {
        CHECK(direct.energies[n] ==
              doctest::Approx(tabulated.energies[n]).epsilon(1e-12));
    }
}
