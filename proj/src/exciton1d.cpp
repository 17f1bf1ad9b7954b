// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include "econofock/exciton1d.hpp"

#include <cmath>

#include "econofock/eigh.hpp"

namespace econofock {
namespace exciton1d {

void GridSpec::validate() const {
    if (!(x_max > x_min)) {
        fail(errc::dimension_mismatch, "grid needs x_max > x_min");
    }
    if (n_points < 16) {
        fail(errc::dimension_mismatch, "grid needs at least 16 points");
    }
}

PotentialSpec PotentialSpec::harmonic(double omega) {
    PotentialSpec spec;
    spec.kind = Kind::harmonic;
    spec.omega = omega;
    return spec;
}

PotentialSpec PotentialSpec::square_well(double depth, double width) {
    PotentialSpec spec;
    spec.kind = Kind::square_well;
    spec.depth = depth;
    spec.width = width;
    return spec;
}

PotentialSpec PotentialSpec::tabulated(std::vector<double> samples) {
    PotentialSpec spec;
    spec.kind = Kind::tabulated;
    spec.samples = std::move(samples);
    return spec;
}

std::vector<double> PotentialSpec::sample(const GridSpec& grid, double mass) const {
    std::vector<double> v(grid.n_points);
    switch (kind) {
        case Kind::harmonic:
            for (std::size_t i = 0; i < grid.n_points; ++i) {
                const double x = grid.x_at(i);
                v[i] = 0.5 * mass * omega * omega * x * x;
            }
            break;
        case Kind::square_well:
            for (std::size_t i = 0; i < grid.n_points; ++i) {
                v[i] = std::abs(grid.x_at(i)) <= 0.5 * width ? -depth : 0.0;
            }
            break;
        case Kind::tabulated:
            if (samples.size() != grid.n_points) {
                fail(errc::dimension_mismatch,
                     "tabulated potential has " + std::to_string(samples.size()) +
                         " samples for " + std::to_string(grid.n_points) + " grid points");
            }
            v = samples;
            break;
    }
    for (double value : v) {
        if (!std::isfinite(value)) {
            fail(errc::non_finite_potential, "potential sample is not finite");
        }
    }
    return v;
}

EigenResult solve_eigen(const GridSpec& grid, const PotentialSpec& potential,
                        double mass, std::size_t n_states) {
    grid.validate();
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        fail(errc::dimension_mismatch, "mass must be finite and positive");
    }
    if (n_states >= grid.n_points - 2) {
        fail(errc::too_many_states,
             "requested " + std::to_string(n_states) + " states on " +
                 std::to_string(grid.n_points) + " points (need n_states < n_points - 2)");
    }

    const std::vector<double> v = potential.sample(grid, mass);
    const double h = grid.spacing();
    const double kinetic = 1.0 / (2.0 * mass * h * h);

    // Hard walls: the unknowns live on the n_points - 2 interior nodes.
    const std::size_t n = grid.n_points - 2;
    std::vector<double> diag(n), off(n - 1, -kinetic);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = 2.0 * kinetic + v[i + 1];
    }

    const TridiagResult tri = tridiag_lowest(diag, off, n_states, true);

    EigenResult result;
    result.energies = tri.eigenvalues;
    result.wavefunctions.reserve(n_states);
    for (std::size_t s = 0; s < n_states; ++s) {
        std::vector<double> psi(grid.n_points, 0.0);
        double weight = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            psi[i + 1] = tri.vectors[s][i];
            weight += psi[i + 1] * psi[i + 1];
        }
        const double scale = 1.0 / std::sqrt(weight * h);
        for (double& value : psi) value *= scale;
        result.wavefunctions.push_back(std::move(psi));
    }
    return result;
}

}  // namespace exciton1d
}  // namespace econofock
