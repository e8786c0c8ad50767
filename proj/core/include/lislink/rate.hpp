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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lis
{

/// Convert a noise spectral density in dBm/Hz over `bandwidth_hz` to watts.
double noise_power_watts(double dbm_per_hz, double bandwidth_hz = 1.0);

inline constexpr double thermal_noise_dbm_per_hz = -174.0;

/// Per-user transmit powers and receiver noise variance.
class PowerProfile
{
  public:
    PowerProfile(std::vector<double> powers, double sigma2);

    /// Equal powers with p_k / sigma^2 = 10^(rho_db / 10).
    static PowerProfile from_rho_db(std::size_t users, double rho_db,
                                    double sigma2 = noise_power_watts(thermal_noise_dbm_per_hz));

    const std::vector<double> &powers() const { return powers_; }
    double power(std::size_t k) const { return powers_.at(k); }
    double sigma2() const { return sigma2_; }
    std::optional<double> rho_db() const { return rho_db_; }
    std::size_t size() const { return powers_.size(); }

  private:
    std::vector<double> powers_;
    double sigma2_;
    std::optional<double> rho_db_;
};

/// Spectral efficiencies in bit/s/Hz.
struct SeReport
{
    std::vector<double> per_user;
    double sum = 0.0;
    std::vector<double> upper_bound_per_user;
};

/// Matched-filter uplink SE of every user on a centralized LIS.
/// Throws std::domain_error for an empty user list or a power profile of the wrong size.
SeReport se_clis(std::span<const UserPosition> users, const LisUnit &lis, double wavelength,
                 const PowerProfile &powers);

/// Interference-free bound log2(1 + p_k / sigma^2 * pi R^2 * PL_k); per_user equals the bound.
SeReport se_clis_upper_bound(std::span<const UserPosition> users, const LisUnit &lis, double wavelength,
                             const PowerProfile &powers);

/// SE of user `k` when served by `unit`, with every other user interfering at that unit.
double se_dlis_unit(std::size_t k, const LisUnit &unit, std::span<const UserPosition> users, double wavelength,
                    const PowerProfile &powers);

} // namespace lis
