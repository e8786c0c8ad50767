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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lis
{

enum class CheckStatus
{
    pass,
    warn,
    fail
};

std::string to_string(CheckStatus status);

struct CheckResult
{
    std::string name;
    CheckStatus status = CheckStatus::pass;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct ValidateParams
{
    std::uint64_t seed = 1;
    std::size_t quadrature_samples = 200;
    double quadrature_tolerance = 1e-6; ///< max relative error, closed form vs quadrature
    ScenarioParams scenario;            ///< scenarios sampled for the far-field coverage check
    std::size_t coverage_runs = 20;
    unsigned threads = 0;
};

/// Two users seen from one unit, both strictly beyond the Fraunhofer distance.
struct FarFieldSample
{
    LisUnit unit{0.0, 0.0, 1.0};
    UserPosition user_k{0.0, 0.0, 1.0};
    UserPosition user_k2{0.0, 0.0, 1.0};
    double wavelength = 0.1;
    double varphi_k = 0.0;
    double varphi_k2 = 0.0;
};

/// R in [0.5, 10] m, lambda in [0.05, 0.3] m, elevations in [10, 90] degrees,
/// distances in (1, 3] Fraunhofer distances.
FarFieldSample draw_far_field_sample(std::mt19937_64 &rng);

/// |closed form - quadrature| / max(|closed form|, 1e-9 pi R^2).
double closed_form_quadrature_error(const FarFieldSample &sample);

/// Largest |planar - spherical| phase over the aperture (after removing the common
/// center phase) for a user at `distance` and elevation `elevation` radians.
double planar_phase_deviation(double radius, double wavelength, double distance, double elevation);

std::vector<CheckResult> run_validation(const ValidateParams &params);

bool all_passed(const std::vector<CheckResult> &checks);

} // namespace lis
