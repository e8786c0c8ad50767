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

#include "lislink/scenario.hpp"

#include <cstddef>
#include <vector>

namespace lis
{

struct ClisSweepParams
{
    std::vector<double> radii{1.0, 5.0, 10.0, 50.0};
    std::vector<double> wavelengths{0.3, 0.05, 0.01, 1e-6};
    std::vector<std::size_t> user_counts{10, 20};
    ScenarioParams scenario; ///< height band, region, rho and seed; radius, wavelength and users are swept
    std::size_t runs = 100;
    unsigned threads = 0;
};

struct ClisSweepRow
{
    std::size_t users = 0;
    double radius = 0.0;
    double wavelength = 0.0;
    double sum_se = 0.0;        ///< ensemble mean of the sum SE
    double bound = 0.0;         ///< ensemble mean of the interference-free bound
    double relative_gap = 0.0;  ///< (bound - sum_se) / bound
    double per_user_se = 0.0;   ///< sum_se / users
};

/// Realization r uses the same user drop for every grid point, and the drop for K users
/// is the first K users of any larger drop.
std::vector<ClisSweepRow> run_clis_sweep(const ClisSweepParams &params);

struct ResponseParams
{
    double wavelength = 0.05;
    std::vector<double> radii{0.5, 1.0, 2.0, 5.0}; ///< one chi curve per radius
    double chi_max = 0.1;
    std::size_t chi_points = 1001;
    double fixed_chi = 0.05;                          ///< for the radius sweep
    double radius_min = 0.01;
    double radius_max = 10.0;
    std::size_t radius_points = 2000;
};

struct ResponseRow
{
    double abscissa = 0.0;  ///< chi for chi curves, R for the radius sweep
    double value = 0.0;
    double parameter = 0.0; ///< R for chi curves, chi for the radius sweep
};

struct ResponseCurves
{
    std::vector<ResponseRow> chi_curves;   ///< |B| in m^2
    std::vector<ResponseRow> radius_sweep; ///< normalized response 2 J1(x) / x
};

ResponseCurves run_response_curves(const ResponseParams &params);

} // namespace lis
