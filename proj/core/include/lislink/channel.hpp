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

#include "lislink/geometry.hpp"

#include <complex>
#include <cstddef>
#include <random>

namespace lis
{

/// Per-user random phase offset varphi_k in [-pi, pi].
class PhaseState
{
  public:
    PhaseState() = default;
    explicit PhaseState(double varphi);

    double varphi() const { return varphi_; }

    /// Uniform draw on [-pi, pi].
    static PhaseState draw(std::mt19937_64 &rng);

  private:
    double varphi_ = 0.0;
};

/// Matched-filter effective channel Sigma_kk' = A_kk' * B(R, kappa, chi_kk').
struct EffectiveChannel
{
    double magnitude = 0.0; ///< |Sigma| in m^2
    double phase = 0.0;     ///< arg(A_kk'), wrapped to (-pi, pi]
    double response = 0.0;  ///< signed LIS response B in m^2

    std::complex<double> value() const { return std::polar(1.0, phase) * response; }
};

/// LIS response B(R, kappa, chi) = 2 pi R J1(R kappa chi) / (kappa chi); pi R^2 at chi = 0.
/// Throws std::domain_error for chi < 0.
double lis_response(double radius, double wavelength, double chi);

/// B / (pi R^2) = 2 J1(x) / x with x = R kappa chi. Lies in [-1, 1].
double normalized_response(double radius, double wavelength, double chi);

/// 2 J1(x) / x, the normalized response as a function of x = R kappa chi.
double normalized_response_at(double x);

/// Extremum magnitude of the normalized response past the n-th J2 zero:
/// 2 |J1(j_{2,n})| / j_{2,n}. Twice specfun::extrema_envelope(n).
double resolution_threshold(std::size_t n);

/// chi_bar = j_{2,n} / (kappa R): beyond it |normalized_response| < resolution_threshold(n).
double spatial_resolution(double radius, double wavelength, std::size_t n);

/// Wraps an angle to (-pi, pi].
double wrap_phase(double angle);

/// Closed-form effective channel between users k and k' at one LIS unit.
EffectiveChannel effective_channel(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit,
                                   double wavelength, PhaseState phase_k, PhaseState phase_k2);

} // namespace lis
