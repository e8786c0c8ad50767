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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lis
{

/// Row-major dense matrix of doubles.
class Matrix
{
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    const std::vector<double> &data() const { return data_; }

    bool operator==(const Matrix &) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Boolean edge mask over a rows x cols bipartite graph.
using EdgeMask = std::vector<std::vector<bool>>;

/// Does a matching cover every row using only allowed edges?
bool has_row_saturating_matching(const EdgeMask &allowed);

/// Minimum-cost assignment of every row to a distinct column (rows <= cols).
/// Entries of `cost` that are not allowed are never chosen; returns nullopt when
/// no row-saturating assignment exists.
std::optional<std::vector<int>> min_cost_assignment(const Matrix &cost, const EdgeMask &allowed);

struct BottleneckAssignment
{
    std::vector<int> column_of_row;
    double objective = 0.0; ///< min over rows of value(row, column_of_row[row])
};

/// Injective assignment maximizing the smallest assigned value over allowed edges.
/// Among optimal assignments the one maximizing sum(log value) is returned.
/// Values must be positive. Returns nullopt when the mask admits no row-saturating assignment.
std::optional<BottleneckAssignment> bottleneck_assignment(const Matrix &values, const EdgeMask &allowed);

} // namespace lis
