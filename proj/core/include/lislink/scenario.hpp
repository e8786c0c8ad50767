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
#include "lislink/rate.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace lis
{

/// Bad or inconsistent configuration.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class Layout
{
    clis,
    dlis
};

struct ScenarioParams
{
    Layout layout = Layout::dlis;
    std::size_t users = 5;
    std::size_t units = 20;
    double radius = 5.0;      ///< C-LIS radius; with area parity the D-LIS radius follows from it
    bool area_parity = true;
    double unit_radius = 0.0; ///< D-LIS radius when area parity is off; 0 means "same as radius"
    double region = 1000.0;   ///< side of the square deployment area, centered on the origin
    double z_min = 50.0;
    double z_max = 200.0;
    double wavelength = 0.05;
    double rho_db = 100.0;
    std::uint64_t seed = 1;
};

struct Scenario
{
    Layout layout = Layout::dlis;
    std::vector<LisUnit> units;
    std::vector<UserPosition> users;
    double wavelength = 0.0;
    PowerProfile powers{{1.0}, 1.0};
    std::uint64_t seed = 0;
};

/// Mixes a master seed with a stream index (splitmix64 finalizer).
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

/// Uniform double on [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64 &rng);

/// R_C / sqrt(M).
double parity_unit_radius(double clis_radius, std::size_t units);

/// Radius every D-LIS unit gets under `params`. Throws ConfigError when area parity
/// conflicts with an explicit unit radius.
double dlis_unit_radius(const ScenarioParams &params);

/// Users and units are drawn from independent streams, so user k does not depend on K or M.
/// Throws ConfigError for invalid parameters.
Scenario generate_scenario(const ScenarioParams &params);

} // namespace lis
