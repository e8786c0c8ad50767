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

#include "lislink/validate.hpp"

#include "lislink/channel.hpp"
#include "lislink/ensemble.hpp"
#include "lislink/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace lis
{

std::string to_string(CheckStatus status)
{
    switch (status)
    {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::warn:
        return "warn";
    case CheckStatus::fail:
        return "fail";
    }
    return "?";
}

namespace
{

double between(std::mt19937_64 &rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

UserPosition place(std::mt19937_64 &rng, double distance)
{
    constexpr double deg = std::numbers::pi / 180.0;
    const double elevation = between(rng, 10.0 * deg, 90.0 * deg);
    const double azimuth = between(rng, -std::numbers::pi, std::numbers::pi);
    const double ground = distance * std::cos(elevation);
    return {ground * std::cos(azimuth), ground * std::sin(azimuth), distance * std::sin(elevation)};
}

} // namespace

FarFieldSample draw_far_field_sample(std::mt19937_64 &rng)
{
    FarFieldSample s;
    const double R = between(rng, 0.5, 10.0);
    s.wavelength = between(rng, 0.05, 0.3);
    s.unit = LisUnit(0.0, 0.0, R);
    const double df = fraunhofer_distance(s.wavelength, R);
    s.user_k = place(rng, df * (1.0 + 2.0 * (1.0 - uniform01(rng))));
    s.user_k2 = place(rng, df * (1.0 + 2.0 * (1.0 - uniform01(rng))));
    s.varphi_k = between(rng, -std::numbers::pi, std::numbers::pi);
    s.varphi_k2 = between(rng, -std::numbers::pi, std::numbers::pi);
    return s;
}

double closed_form_quadrature_error(const FarFieldSample &s)
{
    const PhaseState pk(s.varphi_k), pk2(s.varphi_k2);
    const auto closed = effective_channel(s.user_k, s.user_k2, s.unit, s.wavelength, pk, pk2).value();
    const int needed = resolving_grid(s.user_k, s.user_k2, s.unit, s.wavelength);
    const int start = static_cast<int>(std::bit_ceil(static_cast<unsigned>(std::max(64, needed))));
    const auto quad = effective_channel_quadrature(s.user_k, s.user_k2, s.unit, s.wavelength, pk, pk2, start, 1e-9);
    const double scale = std::max(std::abs(closed), 1e-9 * s.unit.area());
    return std::abs(closed - quad.value) / scale;
}

double planar_phase_deviation(double radius, double wavelength, double distance, double elevation)
{
    const LisUnit unit(0.0, 0.0, radius);
    const UserPosition user(distance * std::cos(elevation), 0.0, distance * std::sin(elevation));
    const double offset = spherical_phase(user, unit, wavelength, PhaseState{}, 0.0, 0.0) -
                          planar_phase(user, unit, wavelength, PhaseState{}, 0.0, 0.0);
    double worst = 0.0;
    constexpr int rings = 64, spokes = 256;
    for (int i = 1; i <= rings; ++i)
    {
        const double r = radius * i / rings;
        for (int j = 0; j < spokes; ++j)
        {
            const double theta = 2.0 * std::numbers::pi * j / spokes;
            const double x = r * std::cos(theta), y = r * std::sin(theta);
            const double d = spherical_phase(user, unit, wavelength, PhaseState{}, x, y) -
                             planar_phase(user, unit, wavelength, PhaseState{}, x, y) - offset;
            worst = std::max(worst, std::fabs(d));
        }
    }
    return worst;
}

std::vector<CheckResult> run_validation(const ValidateParams &params)
{
    std::vector<CheckResult> checks;

    {
        std::vector<double> errors(params.quadrature_samples, 0.0);
        parallel_for(params.quadrature_samples, params.threads, [&](std::size_t i) {
            std::mt19937_64 rng(substream_seed(params.seed, i));
            errors[i] = closed_form_quadrature_error(draw_far_field_sample(rng));
        });
        const double worst = errors.empty() ? 0.0 : *std::max_element(errors.begin(), errors.end());
        checks.push_back({"closed_form_vs_quadrature",
                          worst <= params.quadrature_tolerance ? CheckStatus::pass : CheckStatus::fail, worst,
                          params.quadrature_tolerance,
                          std::to_string(params.quadrature_samples) + " far-field samples"});
    }

    {
        double worst = 0.0;
        for (double R : {0.5, 1.0, 5.0, 50.0})
        {
            const double exact = std::numbers::pi * R * R;
            worst = std::max(worst, std::fabs(lis_response(R, 0.05, 0.0) - exact) / exact);
        }
        checks.push_back({"array_gain", worst <= 1e-12 ? CheckStatus::pass : CheckStatus::fail, worst, 1e-12,
                          "R in {0.5, 1, 5, 50}"});
    }

    {
        const double R = params.scenario.radius;
        const double lambda = params.scenario.wavelength;
        const double df = fraunhofer_distance(lambda, R);
        double previous = std::numeric_limits<double>::infinity();
        bool shrinking = true;
        double at_boundary = 0.0;
        for (double f : {0.5, 1.0, 2.0, 4.0, 8.0})
        {
            const double dev = planar_phase_deviation(R, lambda, f * df, std::numbers::pi / 4.0);
            shrinking = shrinking && dev < previous;
            previous = dev;
            if (f == 1.0)
                at_boundary = dev;
        }
        checks.push_back({"planar_phase_deviation", shrinking ? CheckStatus::pass : CheckStatus::fail, at_boundary,
                          std::numbers::pi / 8.0,
                          "max phase error at the Fraunhofer distance; must shrink over 0.5..8 x"});
    }

    {
        std::size_t links = 0, violations = 0;
        for (std::size_t r = 0; r < params.coverage_runs; ++r)
        {
            ScenarioParams sp = params.scenario;
            sp.seed = substream_seed(params.seed ^ 0x5bd1e995ULL, r);
            const Scenario s = generate_scenario(sp);
            for (const auto &u : s.users)
                for (const auto &unit : s.units)
                {
                    ++links;
                    if (!fraunhofer_valid(s.wavelength, unit.radius(), effective_distance(u, unit)))
                        ++violations;
                }
        }
        const double fraction = links ? static_cast<double>(violations) / static_cast<double>(links) : 0.0;
        checks.push_back({"fraunhofer_coverage", violations ? CheckStatus::warn : CheckStatus::pass, fraction, 0.0,
                          std::to_string(violations) + " of " + std::to_string(links) +
                              " user-unit links inside 8 R^2 / lambda"});
    }
    return checks;
}

bool all_passed(const std::vector<CheckResult> &checks)
{
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.status == CheckStatus::fail; });
}

} // namespace lis
