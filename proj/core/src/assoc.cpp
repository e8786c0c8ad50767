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

#include "lislink/assoc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace lis
{

LsfMatrix::LsfMatrix(Matrix values) : values_(std::move(values))
{
    if (values_.rows() == 0 || values_.cols() == 0)
        throw std::invalid_argument("LSF matrix must be non-empty");
    for (double v : values_.data())
        if (!std::isfinite(v) || !(v > 0.0))
            throw std::invalid_argument("LSF entries must be finite and positive");
}

LsfMatrix::LsfMatrix(std::size_t users, std::size_t units, std::vector<double> row_major)
    : LsfMatrix([&] {
          if (row_major.size() != users * units)
              throw std::invalid_argument("LSF data size does not match its shape");
          Matrix m(users, units);
          for (std::size_t k = 0; k < users; ++k)
              for (std::size_t j = 0; j < units; ++j)
                  m(k, j) = row_major[k * units + j];
          return m;
      }())
{
}

double LsfMatrix::max() const
{
    return *std::max_element(values_.data().begin(), values_.data().end());
}

SelectionMatrix SelectionMatrix::from_assignment(const std::vector<int> &column_of_row, std::size_t units)
{
    SelectionMatrix out{Matrix(column_of_row.size(), units, 0.0), SelectionMode::binary};
    for (std::size_t k = 0; k < column_of_row.size(); ++k)
        out.s(k, static_cast<std::size_t>(column_of_row[k])) = 1.0;
    return out;
}

bool SelectionMatrix::feasible(double tol) const
{
    for (double v : s.data())
        if (!(v >= -tol && v <= 1.0 + tol))
            return false;
    if (mode == SelectionMode::relaxed)
        return true;
    for (double v : s.data())
        if (v != 0.0 && v != 1.0)
            return false;
    for (std::size_t k = 0; k < s.rows(); ++k)
    {
        const auto r = s.row(k);
        if (std::accumulate(r.begin(), r.end(), 0.0) != 1.0)
            return false;
    }
    for (std::size_t m = 0; m < s.cols(); ++m)
    {
        double col = 0.0;
        for (std::size_t k = 0; k < s.rows(); ++k)
            col += s(k, m);
        if (col > 1.0)
            return false;
    }
    return true;
}

std::vector<int> SelectionMatrix::assignment() const
{
    if (mode != SelectionMode::binary)
        throw std::logic_error("assignment() needs a binary selection");
    std::vector<int> out(s.rows(), -1);
    for (std::size_t k = 0; k < s.rows(); ++k)
        for (std::size_t m = 0; m < s.cols(); ++m)
            if (s(k, m) == 1.0)
            {
                out[k] = static_cast<int>(m);
                break;
            }
    return out;
}

double min_lsf_objective(const LsfMatrix &lsf, const SelectionMatrix &selection)
{
    if (selection.s.rows() != lsf.users() || selection.s.cols() != lsf.units())
        throw std::invalid_argument("selection shape does not match the LSF matrix");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < lsf.users(); ++k)
    {
        double mass = 0.0;
        for (std::size_t m = 0; m < lsf.units(); ++m)
            mass += selection.s(k, m) * lsf(k, m);
        best = std::min(best, mass);
    }
    return best;
}

WeightMatrix WeightMatrix::ones(std::size_t users, std::size_t units, double varrho)
{
    return WeightMatrix{Matrix(users, units, 1.0), varrho};
}

void WeightMatrix::update(const Matrix &s)
{
    if (s.rows() != omega.rows() || s.cols() != omega.cols())
        throw std::invalid_argument("weight update shape mismatch");
    for (std::size_t k = 0; k < s.rows(); ++k)
        for (std::size_t m = 0; m < s.cols(); ++m)
            omega(k, m) = 1.0 / (s(k, m) + varrho);
}

BottleneckResult exact_bottleneck_assign(const LsfMatrix &lsf)
{
    if (lsf.users() > lsf.units())
        throw InfeasibleError("more users than LIS units");
    const EdgeMask all(lsf.users(), std::vector<bool>(lsf.units(), true));
    auto best = bottleneck_assignment(lsf.values(), all);
    if (!best)
        throw InfeasibleError("no injective assignment");
    return {SelectionMatrix::from_assignment(best->column_of_row, lsf.units()), best->objective};
}

namespace
{

void check_weights(const LsfMatrix &lsf, const WeightMatrix &weights)
{
    if (weights.omega.rows() != lsf.users() || weights.omega.cols() != lsf.units())
        throw std::invalid_argument("weight matrix shape does not match the LSF matrix");
    for (double w : weights.omega.data())
        if (!std::isfinite(w) || !(w > 0.0))
            throw std::invalid_argument("weights must be finite and positive");
}

} // namespace

lp::LinearProgram subproblem_program(const LsfMatrix &lsf, const WeightMatrix &weights)
{
    check_weights(lsf, weights);
    const std::size_t K = lsf.users();
    const std::size_t M = lsf.units();
    const std::size_t n = K * M + 1;
    const double top = lsf.max();

    lp::LinearProgram program;
    program.num_vars = n;
    program.objective.assign(n, 0.0);
    program.objective[n - 1] = 1.0;

    // The weighted rows become plain sums in u; only the box s <= 1 keeps omega.
    for (std::size_t k = 0; k < K; ++k)
    {
        std::vector<double> a(n, 0.0);
        for (std::size_t m = 0; m < M; ++m)
            a[k * M + m] = -lsf(k, m) / top;
        a[n - 1] = 1.0;
        program.add(std::move(a), lp::Sense::less_equal, 0.0);
    }
    for (std::size_t k = 0; k < K; ++k)
    {
        std::vector<double> a(n, 0.0);
        for (std::size_t m = 0; m < M; ++m)
            a[k * M + m] = 1.0;
        program.add(std::move(a), lp::Sense::equal, 1.0);
    }
    for (std::size_t m = 0; m < M; ++m)
    {
        std::vector<double> a(n, 0.0);
        for (std::size_t k = 0; k < K; ++k)
            a[k * M + m] = 1.0;
        program.add(std::move(a), lp::Sense::less_equal, 1.0);
    }
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t m = 0; m < M; ++m)
            if (weights.omega(k, m) < 1.0)
            {
                std::vector<double> a(n, 0.0);
                a[k * M + m] = 1.0;
                program.add(std::move(a), lp::Sense::less_equal, weights.omega(k, m));
            }
    return program;
}

SubproblemResult lp_subproblem(const LsfMatrix &lsf, const WeightMatrix &weights)
{
    lp::LinearProgram program = subproblem_program(lsf, weights);
    const std::size_t K = lsf.users();
    const std::size_t M = lsf.units();
    const std::size_t n = program.num_vars;
    const double top = lsf.max();

    lp::Solution first = lp::solve(program);
    if (first.status == lp::Status::infeasible)
        throw InfeasibleError("association subproblem is infeasible under the current weights");
    if (first.status != lp::Status::optimal)
        throw std::runtime_error("association subproblem: simplex returned " + lp::to_string(first.status));
    const double t_star = first.x[n - 1];

    // Second stage: keep t optimal and break ties toward the strongest links.
    lp::LinearProgram second = program;
    std::vector<double> floor(n, 0.0);
    floor[n - 1] = 1.0;
    second.add(std::move(floor), lp::Sense::greater_equal, t_star * (1.0 - 1e-9));
    second.objective.assign(n, 0.0);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t m = 0; m < M; ++m)
            second.objective[k * M + m] = std::log(lsf(k, m) / top);
    lp::Solution refined = lp::solve(second);
    const std::vector<double> &u = refined.status == lp::Status::optimal ? refined.x : first.x;

    SubproblemResult out;
    out.relaxed = {Matrix(K, M, 0.0), SelectionMode::relaxed};
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t m = 0; m < M; ++m)
            out.relaxed.s(k, m) = std::clamp(u[k * M + m] / weights.omega(k, m), 0.0, 1.0);
    out.t = t_star * top;
    out.primary = std::move(first);
    return out;
}

namespace
{

SelectionMatrix round_selection(const LsfMatrix &lsf, const Matrix &s, std::size_t top_columns)
{
    const std::size_t K = lsf.users();
    const std::size_t M = lsf.units();
    EdgeMask allowed(K, std::vector<bool>(M, false));
    std::vector<std::size_t> order(M);
    for (std::size_t k = 0; k < K; ++k)
    {
        for (std::size_t m = 0; m < M; ++m)
            allowed[k][m] = s(k, m) > 1e-9;
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lsf(k, a) > lsf(k, b); });
        for (std::size_t i = 0; i < std::min(top_columns, M); ++i)
            allowed[k][order[i]] = true;
    }
    if (auto restricted = bottleneck_assignment(lsf.values(), allowed))
        return SelectionMatrix::from_assignment(restricted->column_of_row, M);
    return exact_bottleneck_assign(lsf).selection;
}

} // namespace

LuaResult lua(const LsfMatrix &lsf, const LuaOptions &options)
{
    if (options.max_iter < 1)
        throw std::invalid_argument("lua needs at least one iteration");
    if (!(options.varrho > 0.0 && options.varrho <= 1e-3))
        throw std::invalid_argument("varrho must lie in (0, 1e-3]");
    if (lsf.users() > lsf.units())
        throw InfeasibleError("more users than LIS units");

    WeightMatrix weights = WeightMatrix::ones(lsf.users(), lsf.units(), options.varrho);
    LuaResult result;
    for (int it = 0; it < options.max_iter; ++it)
    {
        SubproblemResult step;
        try
        {
            step = lp_subproblem(lsf, weights);
        }
        catch (const InfeasibleError &)
        {
            // The reweighted box can exclude a forced unit entry; the previous iterate stands.
            if (it == 0)
                throw;
            result.converged = true;
            break;
        }
        result.trace.push_back(step.t);
        ++result.iterations;

        double change = std::numeric_limits<double>::infinity();
        if (it > 0)
        {
            change = 0.0;
            for (std::size_t i = 0; i < step.relaxed.s.data().size(); ++i)
                change = std::max(change, std::fabs(step.relaxed.s.data()[i] - result.relaxed.s.data()[i]));
        }
        result.relaxed = std::move(step.relaxed);
        if (change < options.tolerance)
        {
            result.converged = true;
            break;
        }
        weights.update(result.relaxed.s);
    }
    result.binary = round_selection(lsf, result.relaxed.s, options.top_columns);
    return result;
}

SelectionMatrix baseline_assign(const LsfMatrix &lsf, BaselinePolicy policy, std::uint64_t seed)
{
    const std::size_t K = lsf.users();
    const std::size_t M = lsf.units();
    if (K > M)
        throw InfeasibleError("more users than LIS units");
    std::vector<int> column_of_row(K, -1);

    if (policy == BaselinePolicy::random)
    {
        std::mt19937_64 rng(seed);
        std::vector<int> columns(M);
        std::iota(columns.begin(), columns.end(), 0);
        // Partial Fisher-Yates with explicit arithmetic so the draw does not depend on the library's distributions.
        for (std::size_t i = 0; i < K; ++i)
        {
            const std::uint64_t span = M - i;
            const std::size_t j = i + static_cast<std::size_t>(rng() % span);
            std::swap(columns[i], columns[j]);
            column_of_row[i] = columns[i];
        }
        return SelectionMatrix::from_assignment(column_of_row, M);
    }

    std::vector<double> best(K, 0.0);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t m = 0; m < M; ++m)
            best[k] = std::max(best[k], lsf(k, m));
    std::vector<std::size_t> users(K);
    std::iota(users.begin(), users.end(), 0);
    std::stable_sort(users.begin(), users.end(), [&](std::size_t a, std::size_t b) { return best[a] > best[b]; });

    std::vector<bool> taken(M, false);
    for (std::size_t k : users)
    {
        std::size_t pick = M;
        for (std::size_t m = 0; m < M; ++m)
            if (!taken[m] && (pick == M || lsf(k, m) > lsf(k, pick)))
                pick = m;
        taken[pick] = true;
        column_of_row[k] = static_cast<int>(pick);
    }
    return SelectionMatrix::from_assignment(column_of_row, M);
}

} // namespace lis
