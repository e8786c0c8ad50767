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

#include "lislink/scenario.hpp"

#include <cmath>
#include <string>

namespace lis
{

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index)
{
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64 &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double parity_unit_radius(double clis_radius, std::size_t units)
{
    if (!(clis_radius > 0.0) || units == 0)
        throw ConfigError("area parity needs a positive radius and at least one unit");
    return clis_radius / std::sqrt(static_cast<double>(units));
}

double dlis_unit_radius(const ScenarioParams &p)
{
    if (!p.area_parity)
        return p.unit_radius > 0.0 ? p.unit_radius : p.radius;
    const double parity = parity_unit_radius(p.radius, p.units);
    if (p.unit_radius > 0.0 && std::fabs(p.unit_radius - parity) > 1e-9 * parity)
        throw ConfigError("unit radius " + std::to_string(p.unit_radius) + " contradicts area parity (expected " +
                          std::to_string(parity) + ")");
    return parity;
}

namespace
{

void check(const ScenarioParams &p)
{
    if (p.users == 0)
        throw ConfigError("need at least one user");
    if (!(p.radius > 0.0) || !std::isfinite(p.radius))
        throw ConfigError("radius must be positive");
    if (!(p.wavelength > 0.0) || !std::isfinite(p.wavelength))
        throw ConfigError("wavelength must be positive");
    if (!(p.region > 0.0))
        throw ConfigError("region must be positive");
    if (!(p.z_min > 0.0) || p.z_max < p.z_min)
        throw ConfigError("height band needs 0 < z_min <= z_max");
    if (!std::isfinite(p.rho_db))
        throw ConfigError("rho_db must be finite");
    if (p.layout == Layout::dlis && p.units < p.users)
        throw ConfigError("D-LIS needs at least as many units as users");
}

} // namespace

Scenario generate_scenario(const ScenarioParams &p)
{
    check(p);
    Scenario s;
    s.layout = p.layout;
    s.wavelength = p.wavelength;
    s.seed = p.seed;
    s.powers = PowerProfile::from_rho_db(p.users, p.rho_db);

    const double half = p.region / 2.0;
    std::mt19937_64 user_rng(substream_seed(p.seed, 0));
    s.users.reserve(p.users);
    for (std::size_t k = 0; k < p.users; ++k)
    {
        const double x = -half + p.region * uniform01(user_rng);
        const double y = -half + p.region * uniform01(user_rng);
        const double z = p.z_min + (p.z_max - p.z_min) * uniform01(user_rng);
        s.users.emplace_back(x, y, z);
    }

    if (p.layout == Layout::clis)
    {
        s.units.emplace_back(0.0, 0.0, p.radius, 0);
        return s;
    }
    const double rd = dlis_unit_radius(p);
    std::mt19937_64 unit_rng(substream_seed(p.seed, 1));
    s.units.reserve(p.units);
    for (std::size_t m = 0; m < p.units; ++m)
    {
        const double x = -half + p.region * uniform01(unit_rng);
        const double y = -half + p.region * uniform01(unit_rng);
        s.units.emplace_back(x, y, rd, static_cast<int>(m));
    }
    return s;
}

} // namespace lis
