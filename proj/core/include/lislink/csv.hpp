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

#include <initializer_list>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lis
{

/// 12 significant digits, "%.12g".
std::string format_number(double value);

/// Comma-separated rows with LF endings. Fields are written verbatim, so text cells
/// must not contain commas, quotes or newlines.
class CsvWriter
{
  public:
    using Cell = std::variant<double, std::size_t, std::string>;

    CsvWriter(std::ostream &out, std::initializer_list<std::string> header);
    void row(std::initializer_list<Cell> cells);

  private:
    std::ostream &out_;
    std::size_t width_;
};

void write_clis_sweep(std::ostream &out, const std::vector<ClisSweepRow> &rows);
void write_response_chi(std::ostream &out, const ResponseCurves &curves);
void write_response_radius(std::ostream &out, const ResponseCurves &curves);

struct NamedEnsemble
{
    std::string series;
    const EnsembleResult *result = nullptr;
};

/// series,se,probability
void write_cdf(std::ostream &out, const std::vector<NamedEnsemble> &series);
/// series,samples,median,percentile_95_likely,fraunhofer_violations
void write_summary(std::ostream &out, const std::vector<NamedEnsemble> &series);
/// check,status,measured,threshold,detail
void write_checks(std::ostream &out, const std::vector<CheckResult> &checks);

} // namespace lis
