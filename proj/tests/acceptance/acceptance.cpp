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

// Acceptance gate: one PASS/FAIL line per criterion, tolerances pinned below.
// Usage: lislink_acceptance [criterion ...]   (no arguments runs all eight)

#include "lislink/assoc.hpp"
#include "lislink/channel.hpp"
#include "lislink/csv.hpp"
#include "lislink/ensemble.hpp"
#include "lislink/sweeps.hpp"
#include "lislink/validate.hpp"

#include "oracles/oracles.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

using namespace lis;

namespace
{

constexpr std::uint64_t seed = 20260417;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1: closed form vs disk quadrature on 200 far-field draws, rel. err <= 1e-6.
Outcome closed_form_vs_quadrature()
{
    constexpr std::size_t samples = 200;
    constexpr double tol = 1e-6;
    std::vector<double> err(samples);
    parallel_for(samples, 0, [&](std::size_t i) {
        std::mt19937_64 rng(substream_seed(seed, i));
        err[i] = closed_form_quadrature_error(draw_far_field_sample(rng));
    });
    const double worst = *std::max_element(err.begin(), err.end());
    return {worst <= tol, fmt("max rel err %.3g <= %.0e over %zu samples", worst, tol, samples)};
}

// 2: B(R, lambda, 0) = pi R^2 to 1e-12 relative.
Outcome array_gain()
{
    double worst = 0.0;
    for (double R : {0.5, 1.0, 5.0, 50.0})
        for (double lambda : {0.003, 0.05, 0.3})
        {
            const double exact = std::numbers::pi * R * R;
            worst = std::max(worst, std::fabs(lis_response(R, lambda, 0.0) - exact) / exact);
        }
    return {worst <= 1e-12, fmt("max rel err %.3g <= 1e-12, R in {0.5,1,5,50}", worst)};
}

// 3: extrema of 2 J1(x)/x at x = j_{2,n} (+- grid step) with magnitude 2|J1(j_{2,n})|/j_{2,n},
// strictly decreasing for n <= 20, and the envelope bound past every chi_bar.
Outcome extrema_structure()
{
    constexpr double step = 1e-4;
    constexpr int count = 20;
    std::vector<double> at, mag;
    double prev2 = normalized_response_at(step), prev1 = normalized_response_at(2 * step);
    for (double x = 3 * step; at.size() < count + 1; x += step)
    {
        const double cur = normalized_response_at(x);
        if (std::fabs(prev1) > std::fabs(prev2) && std::fabs(prev1) >= std::fabs(cur))
        {
            at.push_back(x - step);
            mag.push_back(std::fabs(prev1));
        }
        prev2 = prev1;
        prev1 = cur;
    }
    bool ok = true;
    double worst_pos = 0.0, worst_mag = 0.0;
    for (int n = 1; n <= count; ++n)
    {
        const double j2n = boost::math::cyl_bessel_j_zero(2.0, n);
        const double ref = 2 * std::fabs(boost::math::cyl_bessel_j(1, j2n)) / j2n;
        worst_pos = std::max(worst_pos, std::fabs(at[n - 1] - j2n));
        worst_mag = std::max(worst_mag, std::fabs(mag[n - 1] - ref) / ref);
        ok = ok && std::fabs(at[n - 1] - j2n) <= step && std::fabs(resolution_threshold(n) - ref) <= 1e-12 * ref;
        if (n > 1)
            ok = ok && resolution_threshold(n) < resolution_threshold(n - 1);
    }
    ok = ok && worst_mag <= 1e-6;

    // bound past chi_bar, dense in chi, for two apertures
    std::size_t violations = 0;
    for (double R : {1.0, 5.0})
        for (int n = 1; n <= count; ++n)
        {
            const double lambda = 0.05;
            const double bar = spatial_resolution(R, lambda, n);
            const double thr = resolution_threshold(n);
            for (double chi = bar * (1 + 1e-6); chi <= 2.0; chi += bar * 2e-5)
                violations += std::fabs(normalized_response(R, lambda, chi)) >= thr;
        }
    ok = ok && violations == 0;
    return {ok, fmt("extremum position err %.2g <= step %.0e, magnitude rel err %.2g <= 1e-6, envelope "
                    "decreasing n<=20, %zu bound violations past chi_bar",
                    worst_pos, step, worst_mag, violations)};
}

// 4: |B~| at chi = 0.05 drops by more than 10x for R 1 -> 100 m (lambda 0.3) and for lambda 0.3 -> 0.003 (R 1 m).
Outcome decay_with_aperture()
{
    const double chi = 0.05;
    const double r1 = std::fabs(normalized_response(1.0, 0.3, chi));
    const double r100 = std::fabs(normalized_response(100.0, 0.3, chi));
    const double l3 = std::fabs(normalized_response(1.0, 0.003, chi));
    const bool ok = r100 < r1 / 10 && l3 < r1 / 10;
    return {ok, fmt("R=1: %.4g, R=100: %.4g (ratio %.3g < 0.1); lambda=0.003: %.4g (ratio %.3g < 0.1)", r1, r100,
                    r100 / r1, l3, l3 / r1)};
}

// 5: C-LIS trends with K = 10, rho = 100 dB, 100 runs.
Outcome clis_trends()
{
    ClisSweepParams p;
    p.radii = {1.0, 5.0, 10.0, 50.0};
    p.wavelengths = {0.3, 0.05, 0.01};
    p.user_counts = {10, 20};
    p.runs = 100;
    p.scenario.rho_db = 100.0;
    p.scenario.seed = seed;
    const auto rows = run_clis_sweep(p);
    std::map<std::tuple<std::size_t, double, double>, ClisSweepRow> at;
    for (const auto &r : rows)
        at[{r.users, r.radius, r.wavelength}] = r;

    bool a = true;
    for (double lambda : {0.3, 0.05})
        for (std::size_t i = 1; i < p.radii.size(); ++i)
            a = a && at[{10, p.radii[i], lambda}].sum_se >= at[{10, p.radii[i - 1], lambda}].sum_se;
    bool b = true;
    for (double R : p.radii)
        b = b && at[{10, R, 0.05}].relative_gap < at[{10, R, 0.3}].relative_gap;
    const double gap50 = at[{10, 50.0, 0.05}].relative_gap;
    b = b && gap50 < 0.05;
    double worst_c = 0.0;
    for (double R : p.radii)
    {
        const double k10 = at[{10, R, 0.01}].per_user_se, k20 = at[{20, R, 0.01}].per_user_se;
        worst_c = std::max(worst_c, std::fabs(k10 - k20) / k10);
    }
    const bool c = worst_c < 0.02;
    return {a && b && c, fmt("(a) sum SE nondecreasing in R: %s; (b) gap 0.05 < gap 0.3 at every R and gap(0.05, "
                             "R=50) = %.3g%% < 5%%: %s; (c) max |K10-K20|/K10 per-user SE at lambda 0.01 = %.3g%% < "
                             "2%%: %s",
                             a ? "yes" : "no", 100 * gap50, b ? "yes" : "no", 100 * worst_c, c ? "yes" : "no")};
}

struct FrozenLp
{
    double lsf[24];
    double omega[24];
    double t;
};

const FrozenLp frozen_4x6[] = {
#include "oracles/lp_reference.inc"
};

// 6: LUA vs exact bottleneck on 500 desk-scale instances; LP vs frozen references.
Outcome lua_optimality()
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xy(-500, 500), z(50, 200);
    constexpr int instances = 500;
    int exact = 0;
    double worst_db = 0.0;
    int beyond = 0;
    for (int i = 0; i < instances; ++i)
    {
        const std::size_t K = 1 + rng() % 6;
        const std::size_t M = K + rng() % (11 - K);
        std::vector<double> ux(K), uy(K), uz(K);
        for (std::size_t k = 0; k < K; ++k)
        {
            ux[k] = xy(rng);
            uy[k] = xy(rng);
            uz[k] = z(rng);
        }
        Matrix v(K, M);
        for (std::size_t m = 0; m < M; ++m)
        {
            const double cx = xy(rng), cy = xy(rng);
            for (std::size_t k = 0; k < K; ++k)
                v(k, m) = path_loss(0.05, std::sqrt(std::pow(ux[k] - cx, 2) + std::pow(uy[k] - cy, 2) + uz[k] * uz[k]));
        }
        const LsfMatrix lsf(v);
        std::vector<std::vector<double>> rows(K);
        for (std::size_t k = 0; k < K; ++k)
            rows[k].assign(v.row(k).begin(), v.row(k).end());
        const double best = K <= 6 && M <= 8 ? oracle::brute_force_bottleneck(rows)
                                              : exact_bottleneck_assign(lsf).objective;
        const double got = min_lsf_objective(lsf, lua(lsf).binary);
        const double db = 10 * std::log10(got / best);
        exact += got >= best * (1 - 1e-12);
        worst_db = std::min(worst_db, db);
        beyond += db < -3.0;
    }
    double lp_err = 0.0;
    for (const auto &f : frozen_4x6)
    {
        const LsfMatrix lsf(4, 6, std::vector<double>(f.lsf, f.lsf + 24));
        WeightMatrix w = WeightMatrix::ones(4, 6);
        for (std::size_t i = 0; i < 24; ++i)
            w.omega(i / 6, i % 6) = f.omega[i];
        lp_err = std::max(lp_err, std::fabs(lp_subproblem(lsf, w).t - f.t) / f.t);
    }
    const double share = static_cast<double>(exact) / instances;
    const bool ok = share >= 0.8 && worst_db >= -3.0 && lp_err <= 1e-7;
    return {ok, fmt("exact optimum in %.1f%% >= 80%%; worst %.3f dB >= -3 dB (%d of %d beyond); LP vs frozen 4x6 "
                    "references max rel err %.2g <= 1e-7",
                    100 * share, worst_db, beyond, instances, lp_err)};
}

// 7: D-LIS orderings at M = 20, R_C = 5 m (area parity), lambda = 0.05, 500 realizations.
Outcome dlis_orderings()
{
    auto run = [](std::size_t K, double rc, Associator a) {
        DlisParams p;
        p.scenario.users = K;
        p.scenario.units = 20;
        p.scenario.radius = rc;
        p.scenario.area_parity = true;
        p.scenario.wavelength = 0.05;
        p.scenario.rho_db = 100.0;
        p.scenario.seed = seed;
        p.runs = 500;
        p.associator = a;
        return run_dlis_cdf(p);
    };
    const auto lua5 = run(5, 5.0, Associator::lua);
    const auto near5 = run(5, 5.0, Associator::nearest);
    const auto rand5 = run(5, 5.0, Associator::random);
    const auto lua20 = run(20, 5.0, Associator::lua);
    const auto rand20 = run(20, 5.0, Associator::random);
    const auto lua5_r3 = run(5, 3.0, Associator::lua);

    const bool median_order = lua5.median >= near5.median && near5.median >= rand5.median;
    const bool p5_order =
        lua5.percentile_95_likely >= near5.percentile_95_likely && near5.percentile_95_likely >= rand5.percentile_95_likely;
    const double gap5 = lua5.percentile_95_likely - rand5.percentile_95_likely;
    const double gap20 = lua20.percentile_95_likely - rand20.percentile_95_likely;
    const bool gap_order = gap5 > gap20;
    const double ratio = lua5.percentile_95_likely / lua5_r3.percentile_95_likely;
    const bool radius_gain = ratio > 2.0;
    return {median_order && p5_order && gap_order && radius_gain,
            fmt("K=5 median lua/nearest/random %.4g/%.4g/%.4g ordered: %s; 95%%-likely %.4g/%.4g/%.4g ordered: %s; "
                "lua-random 95%%-likely gap K=5 %.4g > K=20 %.4g: %s; R_C 3->5 m 95%%-likely ratio %.3g > 2: %s",
                lua5.median, near5.median, rand5.median, median_order ? "yes" : "no", lua5.percentile_95_likely,
                near5.percentile_95_likely, rand5.percentile_95_likely, p5_order ? "yes" : "no", gap5, gap20,
                gap_order ? "yes" : "no", ratio, radius_gain ? "yes" : "no")};
}

// 8: repeated CLI runs with the same seed give byte-identical CSV, serial or concurrent.
Outcome determinism()
{
    namespace fs = std::filesystem;
#ifdef LISLINK_CLI_PATH
    const fs::path root = fs::temp_directory_path() / "lislink_acceptance_det";
    fs::remove_all(root);
    auto slurp = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::vector<std::pair<std::string, std::vector<std::string>>> cmds{
        {"response-curve", {"response_chi.csv", "response_radius.csv"}},
        {"clis-sweep --runs 20", {"clis_sweep.csv"}},
        {"dlis-cdf --runs 40 --users 5", {"dlis_cdf.csv", "dlis_summary.csv"}},
        {"dlis-cdf --runs 40 --users 5 --associator random", {"dlis_cdf.csv", "dlis_summary.csv"}},
        {"validate --runs 10", {"validate.csv"}},
    };
    std::size_t compared = 0, differing = 0;
    int failures = 0;
    for (std::size_t c = 0; c < cmds.size(); ++c)
    {
        std::vector<std::string> outputs;
        for (const char *threads : {"1", "1", "4"})
        {
            const fs::path dir = root / (std::to_string(c) + "_" + std::to_string(outputs.size()));
            fs::create_directories(dir);
            std::ofstream(dir / "cfg.json") << "{\"threads\": " << threads << "}";
            const std::string cmd = std::string(LISLINK_CLI_PATH) + " " + cmds[c].first + " --seed 99 --config " +
                                    (dir / "cfg.json").string() + " --out " + dir.string() + " > /dev/null";
            failures += std::system(cmd.c_str()) != 0;
            std::string all;
            for (const auto &f : cmds[c].second)
                all += slurp(dir / f);
            outputs.push_back(all);
        }
        for (std::size_t i = 1; i < outputs.size(); ++i)
        {
            ++compared;
            differing += outputs[i] != outputs[0] || outputs[0].empty();
        }
    }
    return {failures == 0 && differing == 0,
            fmt("%zu repeated CLI runs (threads 1, 1, 4) compared, %zu differ, %d nonzero exits", compared, differing,
                failures)};
#else
    return {false, "CLI not built"};
#endif
}

} // namespace

int main(int argc, char **argv)
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"closed form vs disk quadrature", closed_form_vs_quadrature},
        {"array gain exactness", array_gain},
        {"response extrema and envelope", extrema_structure},
        {"response decay with aperture and frequency", decay_with_aperture},
        {"C-LIS sweep trends", clis_trends},
        {"LUA optimality at desk scale", lua_optimality},
        {"D-LIS orderings", dlis_orderings},
        {"determinism", determinism},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::atoi(argv[i]));
    if (selected.empty())
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i)
            selected.push_back(i);

    int failed = 0;
    for (int n : selected)
    {
        if (n < 1 || n > static_cast<int>(criteria.size()))
        {
            std::fprintf(stderr, "unknown criterion %d\n", n);
            return 2;
        }
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = criteria[n - 1].second();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", n, criteria[n - 1].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
