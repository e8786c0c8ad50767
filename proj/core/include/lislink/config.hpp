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

#include "lislink/ensemble.hpp"
#include "lislink/sweeps.hpp"
#include "lislink/validate.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace lis
{

/// Every tunable of the four figure pipelines. Loaded from a JSON document with
/// the sections "scenario", "dlis", "clis_sweep", "response" and "validate".
struct SimConfig
{
    std::uint64_t seed = 1;
    unsigned threads = 0;
    ScenarioParams scenario;
    std::size_t dlis_runs = 500;
    Associator associator = Associator::lua;
    LuaOptions lua;
    ClisSweepParams clis_sweep;
    ResponseParams response;
    ValidateParams validate;
};

/// Parses a JSON config; missing keys keep their defaults, unknown keys are a ConfigError.
SimConfig parse_config(const std::string &json_text);
SimConfig load_config(const std::string &path);

/// Command-line values that take precedence over the file.
struct Overrides
{
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> users;
    std::optional<std::size_t> units;
    std::optional<double> radius;
    std::optional<double> wavelength;
    std::optional<double> rho_db;
    std::optional<std::size_t> runs;
    std::optional<std::string> associator;
    std::optional<bool> area_parity;
};

enum class Command
{
    response_curve,
    clis_sweep,
    dlis_cdf,
    validate
};

/// Applies overrides the way `command` interprets them (a single --radius replaces the
/// sweep grid for clis-sweep, for instance), then checks the result.
void apply_overrides(SimConfig &config, const Overrides &overrides, Command command);

DlisParams dlis_params(const SimConfig &config);
ClisSweepParams clis_sweep_params(const SimConfig &config);
ValidateParams validate_params(const SimConfig &config);

} // namespace lis
