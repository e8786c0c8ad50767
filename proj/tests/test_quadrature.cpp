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

#include "lislink/quadrature.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace lis;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly")
{
    for (int n : {1, 2, 5, 16, 64, 257})
    {
        const auto &rule = gauss_legendre(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (double w : rule.weights)
            wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-13));
        for (int p = 0; p <= std::min(2 * n - 1, 40); ++p)
        {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += rule.weights[i] * std::pow(rule.nodes[i], p);
            const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
            CHECK(s == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
        }
    }
    CHECK(&gauss_legendre(16) == &gauss_legendre(16));
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("self pair integrates to the disk area on any grid")
{
    const LisUnit unit(3.0, -2.0, 2.5);
    const UserPosition u(40, 80, 120);
    for (QuadratureGrid g : {QuadratureGrid{4, 8}, QuadratureGrid{32, 64}, QuadratureGrid{100, 7}})
        CHECK(std::abs(disk_integral(u, u, unit, 0.2, PhaseState(0.3), PhaseState(0.3), g) - unit.area()) <=
              1e-12 * unit.area());
}

TEST_CASE("random pairs at R = 2, lambda = 0.3 agree with the closed form")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> xy(-300, 300), z(150, 400), ph(-3.0, 3.0);
    const LisUnit unit(0.0, 0.0, 2.0);
    for (int i = 0; i < 20; ++i)
    {
        const UserPosition a(xy(rng), xy(rng), z(rng)), b(xy(rng), xy(rng), z(rng));
        const PhaseState pa(ph(rng)), pb(ph(rng));
        const auto q = effective_channel_quadrature(a, b, unit, 0.3, pa, pb, 2048);
        const auto c = effective_channel(a, b, unit, 0.3, pa, pb).value();
        CHECK(std::abs(q.value - c) <= 1e-6 * std::max(std::abs(c), 1e-9 * unit.area()));
        CHECK_FALSE(q.accuracy_warning);
    }
}

TEST_CASE("error shrinks as the grid is refined")
{
    const LisUnit unit(0.0, 0.0, 2.0);
    const UserPosition a(150, -40, 200), b(-120, 90, 180);
    const auto c = effective_channel(a, b, unit, 0.3, PhaseState{}, PhaseState{}).value();
    const int need = resolving_grid(a, b, unit, 0.3);
    double previous = std::numeric_limits<double>::infinity();
    for (int n : {need / 4, need / 2, need})
    {
        const double err = std::abs(disk_integral(a, b, unit, 0.3, PhaseState{}, PhaseState{}, {n / 2, n}) - c);
        CHECK(err < previous);
        previous = err;
    }
    CHECK(previous <= 1e-8 * unit.area());
}

TEST_CASE("grid limits and warnings")
{
    const LisUnit unit(0.0, 0.0, 8.0);
    const UserPosition a(300, 0, 100), b(-300, 0, 100);
    CHECK_THROWS_AS(effective_channel_quadrature(a, b, unit, 0.05, {}, {}, 32), std::invalid_argument);
    CHECK(resolving_grid(a, b, unit, 0.05) > 64);
    const auto q = effective_channel_quadrature(a, b, unit, 0.05, {}, {}, 64);
    CHECK(q.accuracy_warning);
    const auto capped = effective_channel_quadrature(a, b, unit, 0.05, {}, {}, 64, 1e-8, 128);
    CHECK(capped.accuracy_warning);
    CHECK(capped.grid.angular <= 128);
}

TEST_CASE("planar phase approaches the spherical phase with distance")
{
    const LisUnit unit(0.0, 0.0, 1.0);
    const double lambda = 0.1;
    double previous = std::numeric_limits<double>::infinity();
    for (double d : {20.0, 80.0, 320.0, 1280.0})
    {
        const UserPosition u(d * 0.6, 0.0, d * 0.8);
        const double off = spherical_phase(u, unit, lambda, {}, 0, 0) - planar_phase(u, unit, lambda, {}, 0, 0);
        double worst = 0.0;
        for (double x = -1.0; x <= 1.0; x += 0.05)
            for (double y = -1.0; y <= 1.0; y += 0.05)
                if (x * x + y * y <= 1.0)
                    worst = std::max(worst, std::fabs(spherical_phase(u, unit, lambda, {}, x, y) -
                                                      planar_phase(u, unit, lambda, {}, x, y) - off));
        CHECK(worst < previous);
        previous = worst;
    }
}
