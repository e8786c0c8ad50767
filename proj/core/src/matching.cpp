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

#include "lislink/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lis
{

namespace
{

bool augment(std::size_t row, const EdgeMask &allowed, std::vector<int> &row_of_col, std::vector<char> &seen)
{
    for (std::size_t c = 0; c < allowed[row].size(); ++c)
    {
        if (!allowed[row][c] || seen[c])
            continue;
        seen[c] = 1;
        if (row_of_col[c] < 0 || augment(static_cast<std::size_t>(row_of_col[c]), allowed, row_of_col, seen))
        {
            row_of_col[c] = static_cast<int>(row);
            return true;
        }
    }
    return false;
}

std::size_t mask_cols(const EdgeMask &allowed)
{
    return allowed.empty() ? 0 : allowed.front().size();
}

} // namespace

bool has_row_saturating_matching(const EdgeMask &allowed)
{
    const std::size_t cols = mask_cols(allowed);
    if (allowed.size() > cols)
        return false;
    std::vector<int> row_of_col(cols, -1);
    std::vector<char> seen(cols);
    for (std::size_t r = 0; r < allowed.size(); ++r)
    {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(r, allowed, row_of_col, seen))
            return false;
    }
    return true;
}

// Shortest augmenting path Hungarian method with potentials, rows <= cols.
std::optional<std::vector<int>> min_cost_assignment(const Matrix &cost, const EdgeMask &allowed)
{
    const std::size_t n = cost.rows();
    const std::size_t m = cost.cols();
    if (n == 0)
        return std::vector<int>{};
    if (n > m)
        return std::nullopt;
    if (!has_row_saturating_matching(allowed))
        return std::nullopt;

    double span = 1.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (allowed[r][c])
                span = std::max(span, std::fabs(cost(r, c)));
    const double forbidden = span * 4.0 * static_cast<double>(n + 1) + 1.0;
    auto w = [&](std::size_t r, std::size_t c) { return allowed[r][c] ? cost(r, c) : forbidden; };

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i)
    {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(m + 1, inf);
        std::vector<char> used(m + 1, 0);
        do
        {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j)
            {
                if (used[j])
                    continue;
                const double cur = w(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j])
                {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta)
                {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= m; ++j)
            {
                if (used[j])
                {
                    u[p[j]] += delta;
                    v[j] -= delta;
                }
                else
                {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do
        {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> column_of_row(n, -1);
    for (std::size_t j = 1; j <= m; ++j)
        if (p[j] != 0)
            column_of_row[p[j] - 1] = static_cast<int>(j - 1);
    for (std::size_t r = 0; r < n; ++r)
        if (column_of_row[r] < 0 || !allowed[r][static_cast<std::size_t>(column_of_row[r])])
            return std::nullopt;
    return column_of_row;
}

std::optional<BottleneckAssignment> bottleneck_assignment(const Matrix &values, const EdgeMask &allowed)
{
    const std::size_t n = values.rows();
    const std::size_t m = values.cols();
    if (allowed.size() != n || (n > 0 && mask_cols(allowed) != m))
        throw std::invalid_argument("edge mask does not match the value matrix");
    if (n == 0)
        return BottleneckAssignment{};

    std::vector<double> levels;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (allowed[r][c])
            {
                if (!(values(r, c) > 0.0))
                    throw std::invalid_argument("bottleneck values must be positive");
                levels.push_back(values(r, c));
            }
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    auto at_least = [&](double level) {
        EdgeMask mask(n, std::vector<bool>(m, false));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c)
                mask[r][c] = allowed[r][c] && values(r, c) >= level;
        return mask;
    };

    // Feasibility is monotone in the threshold: find the largest feasible level.
    std::size_t lo = 0, hi = levels.size();
    while (lo < hi)
    {
        const std::size_t mid = (lo + hi) / 2;
        if (has_row_saturating_matching(at_least(levels[mid])))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == levels.size())
        return std::nullopt;

    const double level = levels[lo];
    const EdgeMask mask = at_least(level);
    double top = 0.0;
    for (double v : values.data())
        top = std::max(top, v);
    Matrix cost(n, m, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (mask[r][c])
                cost(r, c) = -std::log(values(r, c) / top);
    auto assignment = min_cost_assignment(cost, mask);
    if (!assignment)
        return std::nullopt;

    BottleneckAssignment result;
    result.column_of_row = std::move(*assignment);
    result.objective = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < n; ++r)
        result.objective = std::min(result.objective, values(r, static_cast<std::size_t>(result.column_of_row[r])));
    return result;
}

} // namespace lis
