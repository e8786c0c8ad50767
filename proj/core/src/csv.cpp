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

#include "lislink/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace lis
{

std::string format_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

CsvWriter::CsvWriter(std::ostream &out, std::initializer_list<std::string> header) : out_(out), width_(header.size())
{
    bool first = true;
    for (const auto &h : header)
    {
        out_ << (first ? "" : ",") << h;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<Cell> cells)
{
    if (cells.size() != width_)
        throw std::logic_error("CSV row width does not match the header");
    bool first = true;
    for (const auto &c : cells)
    {
        if (!first)
            out_ << ',';
        first = false;
        if (const double *d = std::get_if<double>(&c))
            out_ << format_number(*d);
        else if (const std::size_t *n = std::get_if<std::size_t>(&c))
            out_ << *n;
        else
            out_ << std::get<std::string>(c);
    }
    out_ << '\n';
}

void write_clis_sweep(std::ostream &out, const std::vector<ClisSweepRow> &rows)
{
    CsvWriter w(out, {"users", "radius_m", "wavelength_m", "sum_se", "upper_bound", "relative_gap", "per_user_se"});
    for (const auto &r : rows)
        w.row({r.users, r.radius, r.wavelength, r.sum_se, r.bound, r.relative_gap, r.per_user_se});
}

void write_response_chi(std::ostream &out, const ResponseCurves &curves)
{
    CsvWriter w(out, {"chi", "abs_response_m2", "radius_m"});
    for (const auto &r : curves.chi_curves)
        w.row({r.abscissa, r.value, r.parameter});
}

void write_response_radius(std::ostream &out, const ResponseCurves &curves)
{
    CsvWriter w(out, {"radius_m", "normalized_response", "chi"});
    for (const auto &r : curves.radius_sweep)
        w.row({r.abscissa, r.value, r.parameter});
}

void write_cdf(std::ostream &out, const std::vector<NamedEnsemble> &series)
{
    CsvWriter w(out, {"series", "se_bps_hz", "probability"});
    for (const auto &s : series)
        for (const auto &p : s.result->cdf)
            w.row({s.series, p.value, p.probability});
}

void write_summary(std::ostream &out, const std::vector<NamedEnsemble> &series)
{
    CsvWriter w(out, {"series", "samples", "median", "percentile_95_likely", "fraunhofer_violations"});
    for (const auto &s : series)
        w.row({s.series, s.result->cdf.size(), s.result->median, s.result->percentile_95_likely,
               s.result->fraunhofer_violations});
}

void write_checks(std::ostream &out, const std::vector<CheckResult> &checks)
{
    CsvWriter w(out, {"check", "status", "measured", "threshold", "detail"});
    for (const auto &c : checks)
        w.row({c.name, to_string(c.status), c.measured, c.threshold, c.detail});
}

} // namespace lis
