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

// Dense two-phase tableau simplex for the small LPs solved during user association.
//
//   maximize    c^T x
//   subject to  a_i^T x (<=, =, >=) b_i,   x >= 0
//
// Entering columns are priced by most negative reduced cost. After a run of
// degenerate pivots the phase switches to Bland's rule (lowest-index entering
// column, lowest-index leaving basic variable on ratio ties) and keeps it, so
// the method terminates on degenerate problems.

#include <cstddef>
#include <string>
#include <vector>

namespace lis::lp
{

enum class Sense
{
    less_equal,
    equal,
    greater_equal
};

struct Constraint
{
    std::vector<double> coeffs; ///< one entry per variable
    Sense sense = Sense::less_equal;
    double rhs = 0.0;
};

struct LinearProgram
{
    std::size_t num_vars = 0;
    std::vector<double> objective; ///< maximized
    std::vector<Constraint> constraints;

    /// Appends a constraint; `coeffs` must have num_vars entries.
    void add(std::vector<double> coeffs, Sense sense, double rhs);
};

enum class Status
{
    optimal,
    infeasible,
    unbounded,
    pivot_limit
};

std::string to_string(Status status);

struct Solution
{
    Status status = Status::infeasible;
    std::vector<double> x;     ///< primal values
    std::vector<double> duals; ///< one per constraint, sign per the usual max-form convention
    double objective = 0.0;
    std::size_t pivots = 0;
};

enum class Pricing
{
    dantzig,
    bland
};

struct Options
{
    double tolerance = 1e-9;
    Pricing pricing = Pricing::dantzig;
    std::size_t degenerate_switch = 50; ///< consecutive degenerate pivots before Bland's rule
    std::size_t max_pivots = 200000;
};

Solution solve(const LinearProgram &program, const Options &options = {});

} // namespace lis::lp
