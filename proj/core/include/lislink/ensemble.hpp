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

#include "lislink/assoc.hpp"
#include "lislink/scenario.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lis
{

struct CdfPoint
{
    double value = 0.0;
    double probability = 0.0;
};

struct EnsembleResult
{
    std::vector<std::vector<double>> samples; ///< per realization, per user SE in bit/s/Hz
    std::vector<CdfPoint> cdf;                ///< pooled, sorted; probability (i + 1) / n
    double median = 0.0;
    double percentile_95_likely = 0.0;        ///< 5th percentile of the pooled per-user SE
    std::size_t fraunhofer_violations = 0;    ///< serving links inside 8 R^2 / lambda
};

/// Smallest sample x with empirical F(x) >= p. `sorted` must be ascending and non-empty.
double empirical_quantile(std::span<const double> sorted, double p);

/// Pools the samples and fills cdf, median and the 95%-likely value.
EnsembleResult summarize(std::vector<std::vector<double>> samples);

/// Runs `body(i)` for i in [0, count) on up to `threads` workers (0 = hardware concurrency).
/// Exceptions from any task are rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &body);

enum class Associator
{
    lua,
    nearest,
    random
};

std::string to_string(Associator a);
Associator parse_associator(const std::string &name);

struct DlisParams
{
    ScenarioParams scenario;
    std::size_t runs = 500;
    Associator associator = Associator::lua;
    LuaOptions lua;
    unsigned threads = 0;
};

/// Path-loss matrix of a D-LIS scenario, users by units.
LsfMatrix lsf_matrix(const Scenario &scenario);

/// Per realization: draw a scenario, associate users to units by LSF, then score every
/// user with the interference-aware SE at its serving unit.
EnsembleResult run_dlis_cdf(const DlisParams &params);

/// Same ensemble on one centralized LIS of radius params.scenario.radius.
EnsembleResult run_clis_cdf(const DlisParams &params);

} // namespace lis
