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

#include "lislink/scenario.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

using namespace lis;

TEST_CASE("same seed gives the same scenario")
{
    ScenarioParams p;
    p.seed = 42;
    const Scenario a = generate_scenario(p), b = generate_scenario(p);
    REQUIRE(a.users.size() == b.users.size());
    for (std::size_t k = 0; k < a.users.size(); ++k)
    {
        CHECK(a.users[k].x() == b.users[k].x());
        CHECK(a.users[k].z() == b.users[k].z());
    }
    for (std::size_t m = 0; m < a.units.size(); ++m)
        CHECK(a.units[m].center_x() == b.units[m].center_x());
    p.seed = 43;
    CHECK(generate_scenario(p).users[0].x() != a.users[0].x());
}

TEST_CASE("draws stay inside the region and height band")
{
    ScenarioParams p;
    p.users = 20;
    p.units = 20;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        p.seed = seed;
        const Scenario s = generate_scenario(p);
        for (const auto &u : s.users)
        {
            CHECK(std::fabs(u.x()) <= 500.0);
            CHECK(std::fabs(u.y()) <= 500.0);
            CHECK(u.z() >= 50.0);
            CHECK(u.z() <= 200.0);
        }
        for (const auto &unit : s.units)
        {
            CHECK(std::fabs(unit.center_x()) <= 500.0);
            CHECK(unit.radius() == doctest::Approx(5.0 / std::sqrt(20.0)));
        }
    }
}

TEST_CASE("area parity")
{
    CHECK(parity_unit_radius(5.0, 20) == doctest::Approx(1.118).epsilon(1e-3));
    ScenarioParams p;
    p.radius = 5.0;
    p.units = 20;
    const Scenario s = generate_scenario(p);
    double area = 0.0;
    for (const auto &u : s.units)
        area += u.area();
    CHECK(area == doctest::Approx(std::numbers::pi * 25.0).epsilon(1e-12));

    p.unit_radius = 2.0;
    CHECK_THROWS_AS(generate_scenario(p), ConfigError);
    p.unit_radius = parity_unit_radius(5.0, 20);
    CHECK_NOTHROW(generate_scenario(p));
    p.area_parity = false;
    p.unit_radius = 2.0;
    CHECK(generate_scenario(p).units[0].radius() == 2.0);
    p.unit_radius = 0.0;
    CHECK(generate_scenario(p).units[0].radius() == 5.0);
}

TEST_CASE("powers follow rho")
{
    ScenarioParams p;
    p.users = 10;
    p.rho_db = 100.0;
    const Scenario s = generate_scenario(p);
    REQUIRE(s.powers.size() == 10);
    CHECK(s.powers.power(3) / s.powers.sigma2() == doctest::Approx(1e10).epsilon(1e-12));
}

TEST_CASE("user draws nest across user counts")
{
    ScenarioParams p;
    p.seed = 7;
    p.users = 10;
    p.units = 20;
    const Scenario small = generate_scenario(p);
    p.users = 20;
    const Scenario large = generate_scenario(p);
    for (std::size_t k = 0; k < 10; ++k)
    {
        CHECK(small.users[k].x() == large.users[k].x());
        CHECK(small.users[k].y() == large.users[k].y());
        CHECK(small.users[k].z() == large.users[k].z());
    }
    CHECK(small.units[0].center_x() == large.units[0].center_x());
}

TEST_CASE("layouts and parameter errors")
{
    ScenarioParams p;
    p.layout = Layout::clis;
    p.units = 1;
    const Scenario c = generate_scenario(p);
    REQUIRE(c.units.size() == 1);
    CHECK(c.units[0].center_x() == 0.0);
    CHECK(c.units[0].radius() == p.radius);

    ScenarioParams bad;
    bad.users = 21;
    bad.units = 20;
    CHECK_THROWS_AS(generate_scenario(bad), ConfigError);
    bad = {};
    bad.users = 20;
    bad.units = 20;
    CHECK_NOTHROW(generate_scenario(bad));
    bad = {};
    bad.z_min = 0.0;
    CHECK_THROWS_AS(generate_scenario(bad), ConfigError);
    bad = {};
    bad.wavelength = -1.0;
    CHECK_THROWS_AS(generate_scenario(bad), ConfigError);
    bad = {};
    bad.users = 0;
    CHECK_THROWS_AS(generate_scenario(bad), ConfigError);
}

TEST_CASE("substreams are distinct")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t master : {0ull, 1ull, 2ull})
        for (std::uint64_t i = 0; i < 1000; ++i)
            seen.insert(substream_seed(master, i));
    CHECK(seen.size() == 3000);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; ++i)
    {
        const double u = uniform01(rng);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
