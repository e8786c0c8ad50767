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

#include "lislink/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace lis
{

double empirical_quantile(std::span<const double> sorted, double p)
{
    if (sorted.empty())
        throw std::invalid_argument("quantile of an empty sample");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("quantile level must lie in (0, 1]");
    const double n = static_cast<double>(sorted.size());
    // smallest i with (i + 1) / n >= p
    auto i = static_cast<std::size_t>(std::ceil(p * n - 1e-9 * n));
    i = std::clamp<std::size_t>(i, 1, sorted.size());
    return sorted[i - 1];
}

EnsembleResult summarize(std::vector<std::vector<double>> samples)
{
    EnsembleResult out;
    std::vector<double> pooled;
    for (const auto &s : samples)
        pooled.insert(pooled.end(), s.begin(), s.end());
    if (pooled.empty())
        throw std::invalid_argument("ensemble has no samples");
    std::sort(pooled.begin(), pooled.end());
    const double n = static_cast<double>(pooled.size());
    out.cdf.reserve(pooled.size());
    for (std::size_t i = 0; i < pooled.size(); ++i)
        out.cdf.push_back({pooled[i], static_cast<double>(i + 1) / n});
    out.median = empirical_quantile(pooled, 0.5);
    out.percentile_95_likely = empirical_quantile(pooled, 0.05);
    out.samples = std::move(samples);
    return out;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &body)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };
    if (threads <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
}

std::string to_string(Associator a)
{
    switch (a)
    {
    case Associator::lua:
        return "lua";
    case Associator::nearest:
        return "nearest";
    case Associator::random:
        return "random";
    }
    return "?";
}

Associator parse_associator(const std::string &name)
{
    if (name == "lua")
        return Associator::lua;
    if (name == "nearest")
        return Associator::nearest;
    if (name == "random")
        return Associator::random;
    throw ConfigError("unknown associator '" + name + "' (expected lua, nearest or random)");
}

LsfMatrix lsf_matrix(const Scenario &scenario)
{
    Matrix values(scenario.users.size(), scenario.units.size());
    for (std::size_t k = 0; k < scenario.users.size(); ++k)
        for (std::size_t m = 0; m < scenario.units.size(); ++m)
            values(k, m) =
                path_loss(scenario.wavelength, effective_distance(scenario.users[k], scenario.units[m]));
    return LsfMatrix(std::move(values));
}

namespace
{

std::vector<int> associate(const LsfMatrix &lsf, const DlisParams &params, std::uint64_t seed)
{
    switch (params.associator)
    {
    case Associator::lua:
        return lua(lsf, params.lua).binary.assignment();
    case Associator::nearest:
        return baseline_assign(lsf, BaselinePolicy::nearest).assignment();
    case Associator::random:
        return baseline_assign(lsf, BaselinePolicy::random, substream_seed(seed, 2)).assignment();
    }
    return {};
}

template <class Realize> EnsembleResult run_ensemble(const DlisParams &params, Realize realize)
{
    if (params.runs == 0)
        throw ConfigError("runs must be positive");
    std::vector<std::vector<double>> samples(params.runs);
    std::vector<std::size_t> violations(params.runs, 0);
    parallel_for(params.runs, params.threads, [&](std::size_t i) {
        ScenarioParams sp = params.scenario;
        sp.seed = substream_seed(params.scenario.seed, i);
        samples[i] = realize(generate_scenario(sp), violations[i]);
    });
    EnsembleResult out = summarize(std::move(samples));
    for (std::size_t v : violations)
        out.fraunhofer_violations += v;
    return out;
}

} // namespace

EnsembleResult run_dlis_cdf(const DlisParams &params)
{
    DlisParams p = params;
    p.scenario.layout = Layout::dlis;
    return run_ensemble(p, [&](const Scenario &s, std::size_t &violations) {
        const LsfMatrix lsf = lsf_matrix(s);
        const std::vector<int> column = associate(lsf, p, s.seed);
        std::vector<double> se(s.users.size());
        for (std::size_t k = 0; k < s.users.size(); ++k)
        {
            const LisUnit &unit = s.units[static_cast<std::size_t>(column[k])];
            se[k] = se_dlis_unit(k, unit, s.users, s.wavelength, s.powers);
            if (!fraunhofer_valid(s.wavelength, unit.radius(), effective_distance(s.users[k], unit)))
                ++violations;
        }
        return se;
    });
}

EnsembleResult run_clis_cdf(const DlisParams &params)
{
    DlisParams p = params;
    p.scenario.layout = Layout::clis;
    return run_ensemble(p, [&](const Scenario &s, std::size_t &violations) {
        const LisUnit &lis = s.units.front();
        for (const auto &u : s.users)
            if (!fraunhofer_valid(s.wavelength, lis.radius(), effective_distance(u, lis)))
                ++violations;
        return se_clis(s.users, lis, s.wavelength, s.powers).per_user;
    });
}

} // namespace lis
