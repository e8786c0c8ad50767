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

// Drives the installed command-line tool end to end.

#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{

int run(const std::string &args)
{
    const std::string cmd = std::string(LISLINK_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / ("lislink_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path &p, const std::string &text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("usage errors exit with status 2")
{
    CHECK(run("") == 2);
    CHECK(run("no-such-command") == 2);
    CHECK(run("dlis-cdf --associator best") == 2);
    CHECK(run("dlis-cdf --area-parity maybe") == 2);
    CHECK(run("dlis-cdf --config /nonexistent.json") == 2);
}

TEST_CASE("config errors exit with status 2")
{
    const fs::path dir = scratch("config");
    write(dir / "bad.json", R"({"scenario": {"users": 30}})");
    CHECK(run("dlis-cdf --runs 2 --config " + (dir / "bad.json").string() + " --out " + dir.string()) == 2);
    write(dir / "typo.json", R"({"sceanrio": {}})");
    CHECK(run("clis-sweep --config " + (dir / "typo.json").string() + " --out " + dir.string()) == 2);
}

TEST_CASE("every subcommand writes LF-terminated CSV with a header")
{
    const fs::path dir = scratch("outputs");
    const std::string out = " --out " + dir.string();
    REQUIRE(run("response-curve" + out) == 0);
    REQUIRE(run("clis-sweep --runs 3 --users 4" + out) == 0);
    REQUIRE(run("dlis-cdf --runs 3 --users 4" + out) == 0);
    REQUIRE(run("validate --runs 3" + out) == 0);
    for (const char *name : {"response_chi.csv", "response_radius.csv", "clis_sweep.csv", "dlis_cdf.csv",
                             "dlis_summary.csv", "validate.csv"})
    {
        const std::string text = slurp(dir / name);
        REQUIRE_FALSE(text.empty());
        CHECK(text.find('\r') == std::string::npos);
        CHECK(text.back() == '\n');
    }
    const std::string sweep = slurp(dir / "clis_sweep.csv");
    CHECK(sweep.rfind("users,radius_m,wavelength_m,sum_se,upper_bound,relative_gap,per_user_se\n", 0) == 0);
    const std::string summary = slurp(dir / "dlis_summary.csv");
    CHECK(summary.find("dlis_lua,12,") != std::string::npos);
}

TEST_CASE("failed validation exits with status 1")
{
    const fs::path dir = scratch("validate");
    write(dir / "strict.json", R"({"validate": {"quadrature_samples": 3, "quadrature_tolerance": 0}})");
    CHECK(run("validate --config " + (dir / "strict.json").string() + " --out " + dir.string()) == 1);
    CHECK(slurp(dir / "validate.csv").find("closed_form_vs_quadrature,fail,") != std::string::npos);
}

TEST_CASE("LSF dump feeds the association command")
{
    const fs::path dir = scratch("lsf");
    const std::string out = " --out " + dir.string();
    REQUIRE(run("lsf-dump --users 4 --units 9 --realization 2" + out) == 0);
    REQUIRE(fs::exists(dir / "lsf_2.txt"));
    REQUIRE(run("assoc --lsf " + (dir / "lsf_2.txt").string() + out) == 0);
    const std::string text = slurp(dir / "assignment.csv");
    CHECK(text.rfind("user,unit,lsf\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("same seed, same bytes")
{
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    write(a / "threads.json", R"({"threads": 1})");
    write(b / "threads.json", R"({"threads": 3})");
    for (const char *cmd : {"dlis-cdf --runs 6 --seed 11", "clis-sweep --runs 4 --seed 11", "validate --runs 4 --seed 11"})
    {
        REQUIRE(run(std::string(cmd) + " --config " + (a / "threads.json").string() + " --out " + a.string()) == 0);
        REQUIRE(run(std::string(cmd) + " --config " + (b / "threads.json").string() + " --out " + b.string()) == 0);
    }
    for (const char *name : {"dlis_cdf.csv", "dlis_summary.csv", "clis_sweep.csv", "validate.csv"})
        CHECK(slurp(a / name) == slurp(b / name));
}
