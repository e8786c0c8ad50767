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

#include "lislink/rate.hpp"

#include "lislink/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lis
{

namespace
{

void check_inputs(std::span<const UserPosition> users, const PowerProfile &powers)
{
    if (users.empty())
        throw std::domain_error("at least one user is required");
    if (powers.size() != users.size())
        throw std::domain_error("power profile has " + std::to_string(powers.size()) + " entries for " +
                                std::to_string(users.size()) + " users");
}

// Interference-free SNR p_k / sigma^2 * pi R^2 * PL_k.
double free_snr(std::size_t k, const LisUnit &unit, std::span<const UserPosition> users, double wavelength,
                const PowerProfile &powers)
{
    return powers.power(k) / powers.sigma2() * unit.area() *
           path_loss(wavelength, effective_distance(users[k], unit));
}

// log2(1 + p_k PL_k / (sigma^2 / (pi R^2) + sum_{k' != k} p_k' PL_k' Btilde^2)) at one unit,
// rearranged so that a zero interference sum reproduces the bound bit for bit.
double unit_se(std::size_t k, const LisUnit &unit, std::span<const UserPosition> users, double wavelength,
               const PowerProfile &powers)
{
    double interference = 0.0;
    for (std::size_t j = 0; j < users.size(); ++j)
    {
        if (j == k)
            continue;
        const double chi = pair_coupling(users[k], users[j], unit).chi;
        const double b = normalized_response(unit.radius(), wavelength, chi);
        interference += powers.power(j) * path_loss(wavelength, effective_distance(users[j], unit)) * b * b;
    }
    const double sinr = free_snr(k, unit, users, wavelength, powers) /
                        (1.0 + interference * unit.area() / powers.sigma2());
    return std::log2(1.0 + sinr);
}

double bound_se(std::size_t k, const LisUnit &unit, std::span<const UserPosition> users, double wavelength,
                const PowerProfile &powers)
{
    return std::log2(1.0 + free_snr(k, unit, users, wavelength, powers));
}

} // namespace

double noise_power_watts(double dbm_per_hz, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("bandwidth must be positive");
    return std::pow(10.0, (dbm_per_hz - 30.0) / 10.0) * bandwidth_hz;
}

PowerProfile::PowerProfile(std::vector<double> powers, double sigma2) : powers_(std::move(powers)), sigma2_(sigma2)
{
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("noise variance must be positive");
    for (double p : powers_)
        if (!(p > 0.0))
            throw std::invalid_argument("transmit powers must be positive");
}

PowerProfile PowerProfile::from_rho_db(std::size_t users, double rho_db, double sigma2)
{
    const double p = sigma2 * std::pow(10.0, rho_db / 10.0);
    PowerProfile profile(std::vector<double>(users, p), sigma2);
    profile.rho_db_ = rho_db;
    return profile;
}

SeReport se_clis(std::span<const UserPosition> users, const LisUnit &lis, double wavelength,
                 const PowerProfile &powers)
{
    check_inputs(users, powers);
    SeReport report;
    report.per_user.reserve(users.size());
    report.upper_bound_per_user.reserve(users.size());
    for (std::size_t k = 0; k < users.size(); ++k)
    {
        report.per_user.push_back(unit_se(k, lis, users, wavelength, powers));
        report.upper_bound_per_user.push_back(bound_se(k, lis, users, wavelength, powers));
        report.sum += report.per_user.back();
    }
    return report;
}

SeReport se_clis_upper_bound(std::span<const UserPosition> users, const LisUnit &lis, double wavelength,
                             const PowerProfile &powers)
{
    check_inputs(users, powers);
    SeReport report;
    for (std::size_t k = 0; k < users.size(); ++k)
    {
        report.per_user.push_back(bound_se(k, lis, users, wavelength, powers));
        report.sum += report.per_user.back();
    }
    report.upper_bound_per_user = report.per_user;
    return report;
}

double se_dlis_unit(std::size_t k, const LisUnit &unit, std::span<const UserPosition> users, double wavelength,
                    const PowerProfile &powers)
{
    check_inputs(users, powers);
    if (k >= users.size())
        throw std::domain_error("user index " + std::to_string(k) + " out of range");
    return unit_se(k, unit, users, wavelength, powers);
}

} // namespace lis
