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
#include "lislink/channel.hpp"
#include "lislink/specfun.hpp"
#include "lislink/validate.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

namespace
{

void bm_bessel_j(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    double x = 0.1;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(lis::specfun::bessel_j(order, x));
        x = x > 60.0 ? 0.1 : x + 0.37;
    }
}
BENCHMARK(bm_bessel_j)->Arg(0)->Arg(1)->Arg(2);

void bm_lis_response(benchmark::State &state)
{
    double chi = 0.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(lis::lis_response(5.0, 0.05, chi));
        chi = chi > 0.5 ? 0.0 : chi + 1e-3;
    }
}
BENCHMARK(bm_lis_response);

void bm_quadrature(benchmark::State &state)
{
    std::mt19937_64 rng(7);
    const auto sample = lis::draw_far_field_sample(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(lis::closed_form_quadrature_error(sample));
}
BENCHMARK(bm_quadrature)->Unit(benchmark::kMillisecond);

lis::LsfMatrix random_lsf(std::size_t K, std::size_t M, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xy(-500.0, 500.0), z(50.0, 200.0);
    lis::Matrix v(K, M);
    std::vector<double> ux(K), uy(K), uz(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        ux[k] = xy(rng);
        uy[k] = xy(rng);
        uz[k] = z(rng);
    }
    for (std::size_t m = 0; m < M; ++m)
    {
        const double cx = xy(rng), cy = xy(rng);
        for (std::size_t k = 0; k < K; ++k)
        {
            const double d2 = (ux[k] - cx) * (ux[k] - cx) + (uy[k] - cy) * (uy[k] - cy) + uz[k] * uz[k];
            v(k, m) = 1.0 / d2;
        }
    }
    return lis::LsfMatrix(v);
}

void bm_lp_subproblem(benchmark::State &state)
{
    const auto K = static_cast<std::size_t>(state.range(0));
    const auto lsf = random_lsf(K, 20, 11);
    const auto w = lis::WeightMatrix::ones(K, 20);
    for (auto _ : state)
        benchmark::DoNotOptimize(lis::lp_subproblem(lsf, w));
}
BENCHMARK(bm_lp_subproblem)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void bm_lua(benchmark::State &state)
{
    const auto K = static_cast<std::size_t>(state.range(0));
    const auto lsf = random_lsf(K, 20, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(lis::lua(lsf));
}
BENCHMARK(bm_lua)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
