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

#include "lislink/matching.hpp"
#include "lislink/simplex.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lis
{

/// Raised when an association problem admits no feasible selection.
class InfeasibleError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// K x M large-scale fading gains, K <= M, every entry finite and positive.
class LsfMatrix
{
  public:
    explicit LsfMatrix(Matrix values);
    LsfMatrix(std::size_t users, std::size_t units, std::vector<double> row_major);

    std::size_t users() const { return values_.rows(); }
    std::size_t units() const { return values_.cols(); }
    double operator()(std::size_t k, std::size_t m) const { return values_(k, m); }
    const Matrix &values() const { return values_; }
    double max() const;

  private:
    Matrix values_;
};

enum class SelectionMode
{
    relaxed,
    binary
};

struct SelectionMatrix
{
    Matrix s;
    SelectionMode mode = SelectionMode::binary;

    /// Binary selection from a column index per user.
    static SelectionMatrix from_assignment(const std::vector<int> &column_of_row, std::size_t units);

    /// Row exactly one, column at most one, entries in {0, 1}. Relaxed matrices only need entries in [0, 1].
    bool feasible(double tol = 1e-9) const;

    /// Serving column per user (binary mode); throws std::logic_error otherwise.
    std::vector<int> assignment() const;
};

/// min_k sum_m s_km * lsf_km.
double min_lsf_objective(const LsfMatrix &lsf, const SelectionMatrix &selection);

struct WeightMatrix
{
    Matrix omega;
    double varrho = 1e-6;

    static WeightMatrix ones(std::size_t users, std::size_t units, double varrho = 1e-6);

    /// omega = 1 / (s + varrho).
    void update(const Matrix &s);
};

struct BottleneckResult
{
    SelectionMatrix selection;
    double objective = 0.0;
};

/// Exact max-min injective assignment. Throws InfeasibleError when K > M.
BottleneckResult exact_bottleneck_assign(const LsfMatrix &lsf);

/// Weighted relaxation in the substituted variables u = omega * s (one per entry, row-major)
/// plus the epigraph variable t as the last column. Gains are normalized by their maximum.
lp::LinearProgram subproblem_program(const LsfMatrix &lsf, const WeightMatrix &weights);

struct SubproblemResult
{
    SelectionMatrix relaxed; ///< s = u / omega
    double t = 0.0;          ///< in units of the input gains
    lp::Solution primary;    ///< stage-one solution of subproblem_program
};

/// Solves max t over the relaxed selection; among optimal points prefers mass on strong links.
/// Throws InfeasibleError if the weights make the row equalities unsatisfiable.
SubproblemResult lp_subproblem(const LsfMatrix &lsf, const WeightMatrix &weights);

struct LuaOptions
{
    int max_iter = 20;
    double varrho = 1e-6;
    double tolerance = 1e-6; ///< stop once max |delta s| falls below this
    std::size_t top_columns = 3;
};

struct LuaResult
{
    SelectionMatrix binary;
    SelectionMatrix relaxed;
    std::vector<double> trace; ///< t of every solved subproblem
    int iterations = 0;
    bool converged = false;
};

LuaResult lua(const LsfMatrix &lsf, const LuaOptions &options = {});

enum class BaselinePolicy
{
    nearest,
    random
};

SelectionMatrix baseline_assign(const LsfMatrix &lsf, BaselinePolicy policy, std::uint64_t seed = 0);

/// Plain-text dump: one line per user, space-separated gains.
void write_lsf(std::ostream &out, const LsfMatrix &lsf);
/// Reads the dump format; '#' lines and blank lines are skipped. Throws std::runtime_error on ragged rows.
LsfMatrix read_lsf(std::istream &in);

} // namespace lis
