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

#include "lislink/sweeps.hpp"

#include "lislink/channel.hpp"
#include "lislink/ensemble.hpp"
#include "lislink/rate.hpp"

#include <algorithm>
#include <cmath>

namespace lis
{

std::vector<ClisSweepRow> run_clis_sweep(const ClisSweepParams &params)
{
    if (params.radii.empty() || params.wavelengths.empty() || params.user_counts.empty())
        throw ConfigError("sweep grids must be non-empty");
    if (params.runs == 0)
        throw ConfigError("runs must be positive");
    const std::size_t max_users = *std::max_element(params.user_counts.begin(), params.user_counts.end());
    if (max_users == 0)
        throw ConfigError("user counts must be positive");

    const std::size_t nk = params.user_counts.size();
    const std::size_t nr = params.radii.size();
    const std::size_t nl = params.wavelengths.size();
    const std::size_t cells = nk * nr * nl;
    // per realization: (sum_se, bound) for every cell
    std::vector<std::vector<double>> acc(params.runs, std::vector<double>(2 * cells, 0.0));

    parallel_for(params.runs, params.threads, [&](std::size_t r) {
        ScenarioParams sp = params.scenario;
        sp.layout = Layout::clis;
        sp.users = max_users;
        sp.seed = substream_seed(params.scenario.seed, r);
        const Scenario drop = generate_scenario(sp);
        std::size_t cell = 0;
        for (std::size_t K : params.user_counts)
        {
            const std::span<const UserPosition> users(drop.users.data(), K);
            const PowerProfile powers = PowerProfile::from_rho_db(K, sp.rho_db);
            for (double R : params.radii)
            {
                const LisUnit lis(0.0, 0.0, R, 0);
                for (double lambda : params.wavelengths)
                {
                    acc[r][2 * cell] = se_clis(users, lis, lambda, powers).sum;
                    acc[r][2 * cell + 1] = se_clis_upper_bound(users, lis, lambda, powers).sum;
                    ++cell;
                }
            }
        }
    });

    std::vector<ClisSweepRow> rows;
    rows.reserve(cells);
    std::size_t cell = 0;
    for (std::size_t K : params.user_counts)
        for (double R : params.radii)
            for (double lambda : params.wavelengths)
            {
                double se = 0.0, bound = 0.0;
                for (const auto &a : acc)
                {
                    se += a[2 * cell];
                    bound += a[2 * cell + 1];
                }
                se /= static_cast<double>(params.runs);
                bound /= static_cast<double>(params.runs);
                rows.push_back({K, R, lambda, se, bound, (bound - se) / bound, se / static_cast<double>(K)});
                ++cell;
            }
    return rows;
}

namespace
{

double grid_point(double lo, double hi, std::size_t i, std::size_t n)
{
    return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

} // namespace

ResponseCurves run_response_curves(const ResponseParams &p)
{
    if (p.radii.empty() || p.chi_points == 0 || p.radius_points == 0)
        throw ConfigError("response grids must be non-empty");
    if (!(p.wavelength > 0.0) || !(p.chi_max > 0.0) || !(p.fixed_chi >= 0.0) || !(p.radius_min > 0.0) ||
        !(p.radius_max >= p.radius_min))
        throw ConfigError("response parameters out of range");

    ResponseCurves out;
    out.chi_curves.reserve(p.radii.size() * p.chi_points);
    for (double R : p.radii)
        for (std::size_t i = 0; i < p.chi_points; ++i)
        {
            const double chi = grid_point(0.0, p.chi_max, i, p.chi_points);
            out.chi_curves.push_back({chi, std::fabs(lis_response(R, p.wavelength, chi)), R});
        }
    out.radius_sweep.reserve(p.radius_points);
    for (std::size_t i = 0; i < p.radius_points; ++i)
    {
        const double R = grid_point(p.radius_min, p.radius_max, i, p.radius_points);
        out.radius_sweep.push_back({R, normalized_response(R, p.wavelength, p.fixed_chi), p.fixed_chi});
    }
    return out;
}

} // namespace lis
