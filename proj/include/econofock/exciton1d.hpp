// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "econofock/errors.hpp"

namespace econofock {
namespace exciton1d {

/// Uniform 1-D configuration-space grid including both endpoints.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n_points = 0;

    double spacing() const {
        return (x_max - x_min) / static_cast<double>(n_points - 1);
    }
    double x_at(std::size_t i) const {
        return x_min + static_cast<double>(i) * spacing();
    }
    void validate() const;
};

/// Economic potential V(x): institutional constraints, interest pressure, or
/// collateral conditions acting on the bound money-debt pair.
struct PotentialSpec {
    enum class Kind { harmonic, square_well, tabulated };

    Kind kind = Kind::harmonic;
    double omega = 1.0;            // harmonic: V = 0.5 m omega^2 x^2
    double depth = 1.0;            // square well: V = -depth for |x| <= width/2
    double width = 1.0;
    std::vector<double> samples;   // tabulated: one value per grid point

    static PotentialSpec harmonic(double omega);
    static PotentialSpec square_well(double depth, double width);
    static PotentialSpec tabulated(std::vector<double> samples);

    std::vector<double> sample(const GridSpec& grid, double mass) const;
};

/// Ascending bound-state energies and grid-normalized wavefunctions
/// (sum |psi|^2 h = 1), zero at both walls.
struct EigenResult {
    std::vector<double> energies;
    std::vector<std::vector<double>> wavefunctions;
};

/// Stationary states of [-(1/2m) d^2/dx^2 + V(x)] psi = E psi with hard-wall
/// boundaries, discretized by second-order central differences and solved by
/// a symmetric tridiagonal routine (hbar = 1).
EigenResult solve_eigen(const GridSpec& grid, const PotentialSpec& potential,
                        double mass, std::size_t n_states);

}  // namespace exciton1d
}  // namespace econofock
