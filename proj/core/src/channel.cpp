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

#include "lislink/channel.hpp"

#include "lislink/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lis
{

namespace
{
// Below this argument 2 J1(x)/x is replaced by 1 - x^2/8 (next term x^4/192 < 1e-17).
constexpr double small_argument = 1e-4;
} // namespace

PhaseState::PhaseState(double varphi) : varphi_(varphi)
{
    if (!(std::fabs(varphi) <= std::numbers::pi))
        throw std::invalid_argument("phase must lie in [-pi, pi]");
}

PhaseState PhaseState::draw(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    return PhaseState(dist(rng));
}

double normalized_response_at(double x)
{
    x = std::fabs(x);
    if (x < small_argument)
        return 1.0 - x * x / 8.0;
    return 2.0 * specfun::bessel_j(1, x) / x;
}

double lis_response(double radius, double wavelength, double chi)
{
    if (!(chi >= 0.0))
        throw std::domain_error("chi must be nonnegative");
    if (!(radius > 0.0))
        throw std::domain_error("radius must be positive");
    const double kappa = wavenumber(wavelength);
    return std::numbers::pi * radius * radius * normalized_response_at(radius * kappa * chi);
}

double normalized_response(double radius, double wavelength, double chi)
{
    if (!(chi >= 0.0))
        throw std::domain_error("chi must be nonnegative");
    if (!(radius > 0.0))
        throw std::domain_error("radius must be positive");
    return normalized_response_at(radius * wavenumber(wavelength) * chi);
}

double resolution_threshold(std::size_t n)
{
    return 2.0 * specfun::extrema_envelope(n);
}

double spatial_resolution(double radius, double wavelength, std::size_t n)
{
    if (!(radius > 0.0))
        throw std::domain_error("radius must be positive");
    return specfun::bessel_zero(2, n) / (wavenumber(wavelength) * radius);
}

double wrap_phase(double angle)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wrapped = std::remainder(angle, two_pi);
    if (wrapped <= -std::numbers::pi)
        wrapped += two_pi;
    return wrapped;
}

EffectiveChannel effective_channel(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit,
                                   double wavelength, PhaseState phase_k, PhaseState phase_k2)
{
    const double kappa = wavenumber(wavelength);
    const double d_k = effective_distance(user_k, unit);
    const double d_k2 = effective_distance(user_k2, unit);

    EffectiveChannel ch;
    ch.response = lis_response(unit.radius(), wavelength, pair_coupling(user_k, user_k2, unit).chi);
    ch.magnitude = std::fabs(ch.response);
    ch.phase = wrap_phase(kappa * (d_k - d_k2) + phase_k.varphi() - phase_k2.varphi());
    return ch;
}

} // namespace lis
