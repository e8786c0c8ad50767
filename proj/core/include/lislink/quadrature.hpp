// SPDX-License-Identifier: Apache-2.0
//
// lislink: link-level simulation of large-intelligent-surface uplinks
// Copyright (C) 2026 The lislink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Brute-force surface integration of the matched-filter effective channel.
//
// Integrates h_k^*(x, y) h_k'(x, y) over the disk with the planar-wavefront
// phase model: the phase at (x, y) is measured through its signed distance to
// the user's zero-crossing line. Nothing here goes through the Bessel kernel or
// the pair coefficients, so it serves as an independent check of the closed form.

#include "lislink/channel.hpp"
#include "lislink/geometry.hpp"

#include <complex>
#include <span>
#include <vector>

namespace lis
{

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule; rules are cached, the returned reference stays valid for the program lifetime.
const GaussLegendreRule &gauss_legendre(int n);

/// Polar tensor grid: Gauss-Legendre in r, trapezoid in theta.
struct QuadratureGrid
{
    int radial = 32;
    int angular = 64;
};

struct QuadratureResult
{
    std::complex<double> value;
    QuadratureGrid grid;       ///< finest grid used
    int refinements = 0;       ///< grid doublings performed
    double last_change = 0.0;  ///< |I_final - I_previous|
    bool accuracy_warning = false;
};

/// Plane-wave phase of a user at surface point (x, y) relative to the unit center:
/// kappa d_k^c + kappa cos(phi_k) * dd_k + varphi_k, with dd_k the signed distance to
/// the zero-crossing line through the center at elevation-projection angle alpha_k.
double planar_phase(const UserPosition &user, const LisUnit &unit, double wavelength, PhaseState phase, double x,
                    double y);

/// Exact spherical-wave phase kappa |p - u| + varphi_k at the same point.
double spherical_phase(const UserPosition &user, const LisUnit &unit, double wavelength, PhaseState phase, double x,
                       double y);

/// Single-grid evaluation of the disk integral.
std::complex<double> disk_integral(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit,
                                   double wavelength, PhaseState phase_k, PhaseState phase_k2, QuadratureGrid grid);

/// Smallest angular node count expected to resolve the integrand oscillation.
int resolving_grid(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit, double wavelength);

/// Disk integral refined by grid doubling, starting from `grid_n` angular and
/// `grid_n / 2` radial nodes, until successive grids agree to `tolerance`
/// (relative, with an absolute floor of 1e-12 pi R^2). `accuracy_warning` is set
/// when the starting grid under-resolves the oscillation or the refinement cap
/// is hit. Throws std::invalid_argument for grid_n < 64.
QuadratureResult effective_channel_quadrature(const UserPosition &user_k, const UserPosition &user_k2,
                                              const LisUnit &unit, double wavelength, PhaseState phase_k,
                                              PhaseState phase_k2, int grid_n, double tolerance = 1e-8,
                                              int max_grid = 1 << 15);

} // namespace lis
