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

#include "doctest.h"
#include "oracles/oracles.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace lis;

namespace
{

std::vector<std::vector<double>> rows_of(const Matrix &m)
{
    std::vector<std::vector<double>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        out[r].assign(m.row(r).begin(), m.row(r).end());
    return out;
}

EdgeMask full(std::size_t r, std::size_t c)
{
    return EdgeMask(r, std::vector<bool>(c, true));
}

} // namespace

TEST_CASE("row-saturating matching")
{
    CHECK(has_row_saturating_matching({{true, false}, {false, true}}));
    CHECK_FALSE(has_row_saturating_matching({{true, false}, {true, false}}));
    CHECK_FALSE(has_row_saturating_matching({{true}, {true}}));
    CHECK(has_row_saturating_matching({}));
}

TEST_CASE("min-cost assignment against enumeration")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        const std::size_t K = 1 + trial % 5, M = K + trial % 3;
        Matrix cost(K, M);
        for (std::size_t r = 0; r < K; ++r)
            for (std::size_t c = 0; c < M; ++c)
                cost(r, c) = u(rng);
        const auto got = min_cost_assignment(cost, full(K, M));
        REQUIRE(got);
        double total = 0.0;
        std::vector<bool> used(M, false);
        for (std::size_t r = 0; r < K; ++r)
        {
            const auto c = static_cast<std::size_t>((*got)[r]);
            CHECK_FALSE(used[c]);
            used[c] = true;
            total += cost(r, c);
        }
        std::vector<int> perm(M);
        std::iota(perm.begin(), perm.end(), 0);
        double best = 1e300;
        do
        {
            double s = 0.0;
            for (std::size_t r = 0; r < K; ++r)
                s += cost(r, static_cast<std::size_t>(perm[r]));
            best = std::min(best, s);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(total == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("min-cost assignment respects the mask")
{
    Matrix cost(2, 2, 0.0);
    cost(0, 0) = 0.0;
    cost(0, 1) = 100.0;
    cost(1, 0) = 0.0;
    cost(1, 1) = 100.0;
    const auto got = min_cost_assignment(cost, {{false, true}, {true, true}});
    REQUIRE(got);
    CHECK((*got)[0] == 1);
    CHECK((*got)[1] == 0);
    CHECK_FALSE(min_cost_assignment(cost, {{true, false}, {true, false}}));
}

TEST_CASE("bottleneck assignment against permutation brute force")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int trial = 0; trial < 300; ++trial)
    {
        const std::size_t K = 1 + trial % 6, M = K + trial % 4;
        Matrix v(K, M);
        for (std::size_t r = 0; r < K; ++r)
            for (std::size_t c = 0; c < M; ++c)
                v(r, c) = u(rng);
        const auto got = bottleneck_assignment(v, full(K, M));
        REQUIRE(got);
        CHECK(got->objective == oracle::brute_force_bottleneck(rows_of(v)));
    }
}

TEST_CASE("bottleneck tie-break prefers the larger product")
{
    // Both assignments reach min 1; the diagonal also scores 10 on the other row.
    Matrix v(2, 2);
    v(0, 0) = 10.0;
    v(0, 1) = 1.0;
    v(1, 0) = 1.0;
    v(1, 1) = 1.0;
    const auto got = bottleneck_assignment(v, full(2, 2));
    REQUIRE(got);
    CHECK(got->objective == 1.0);
    CHECK(got->column_of_row == std::vector<int>{0, 1});
}

TEST_CASE("bottleneck input errors")
{
    Matrix v(2, 3, 1.0);
    CHECK_THROWS_AS(bottleneck_assignment(v, full(2, 2)), std::invalid_argument);
    v(0, 0) = 0.0;
    CHECK_THROWS_AS(bottleneck_assignment(v, full(2, 3)), std::invalid_argument);
    CHECK_FALSE(bottleneck_assignment(Matrix(3, 2, 1.0), full(3, 2)));
}
