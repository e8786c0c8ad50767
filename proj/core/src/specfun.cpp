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

#include "lislink/specfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lis::specfun
{
namespace
{

using real = long double;

void check_order(int order, int lo, int hi)
{
    if (order < lo || order > hi)
        throw std::domain_error("Bessel order " + std::to_string(order) + " is not supported");
}

// Sum_{k>=0} (-1)^k (x/2)^{2k+n} / (k! (k+n)!), x >= 0.
real series(int n, real x)
{
    const real half = x / 2;
    const real q = -half * half;
    real term = 1;
    for (int i = 1; i <= n; ++i)
        term *= half / i;
    real sum = term;
    for (int k = 1; k < 200; ++k)
    {
        term *= q / (static_cast<real>(k) * static_cast<real>(k + n));
        sum += term;
        if (std::fabs(term) < 1e-24L)
            break;
    }
    return sum;
}

// Hankel expansion J_n(x) = sqrt(2/(pi x)) (P cos w - Q sin w), w = x - (n/2 + 1/4) pi,
// summed until the terms stop shrinking.
real asymptotic(int n, real x)
{
    const real mu = 4.0L * n * n;
    real p = 1, q = 0;
    real term = 1;
    real last = 1e300L;
    for (int k = 1; k < 200; ++k)
    {
        const real odd = 2 * k - 1;
        term *= (mu - odd * odd) / (k * 8.0L * x);
        const real mag = std::fabs(term);
        if (mag >= last)
            break;
        last = mag;
        // k odd -> Q, k even -> P; signs alternate in pairs.
        const int r = k % 4;
        if (r == 1)
            q += term;
        else if (r == 2)
            p -= term;
        else if (r == 3)
            q -= term;
        else
            p += term;
        if (mag < 1e-21L)
            break;
    }
    const real pi = std::numbers::pi_v<real>;
    const real w = x - (n / 2.0L + 0.25L) * pi;
    return std::sqrt(2.0L / (pi * x)) * (p * std::cos(w) - q * std::sin(w));
}

double odd_sign(int order, double x, real value)
{
    if (x < 0 && (order % 2) == 1)
        value = -value;
    return static_cast<double>(value);
}

class ZeroTables
{
  public:
    double get(int order, std::size_t n)
    {
        if (n == 0)
            throw std::domain_error("Bessel zero index starts at 1");
        if (n > max_zero_index)
            throw std::length_error("Bessel zero index " + std::to_string(n) + " exceeds table capacity " +
                                    std::to_string(max_zero_index));
        auto &table = tables_[static_cast<std::size_t>(order - 1)];
        std::lock_guard<std::mutex> lock(mutex_);
        if (table.size() < 64)
            extend(order, table, 64);
        if (table.size() < n)
            extend(order, table, std::max<std::size_t>(n, 2 * table.size()));
        return table[n - 1];
    }

  private:
    static void extend(int order, std::vector<double> &table, std::size_t count)
    {
        count = std::min(count, max_zero_index);
        table.reserve(count);
        for (std::size_t n = table.size() + 1; n <= count; ++n)
            table.push_back(locate(order, n));
    }

    // McMahon's estimate lies within 0.35 of the zero and neighbouring zeros are
    // more than pi apart, so [estimate - pi/2, estimate + pi/2] brackets exactly one.
    static double locate(int order, std::size_t n)
    {
        const double pi = std::numbers::pi;
        const double estimate = (static_cast<double>(n) + order / 2.0 - 0.25) * pi;
        double lo = estimate - pi / 2;
        double hi = estimate + pi / 2;
        double f_lo = bessel_j(order, lo);
        const double f_hi = bessel_j(order, hi);
        if (f_lo == 0.0)
            return lo;
        if (f_hi == 0.0)
            return hi;
        if ((f_lo > 0) == (f_hi > 0))
            throw std::runtime_error("Bessel zero bracket lost its sign change");
        for (int it = 0; it < 200; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi || hi - lo < 1e-13)
                break;
            const double f_mid = bessel_j(order, mid);
            if (f_mid == 0.0)
                return mid;
            if ((f_mid > 0) == (f_lo > 0))
            {
                lo = mid;
                f_lo = f_mid;
            }
            else
            {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }

    std::mutex mutex_;
    std::array<std::vector<double>, 2> tables_;
};

ZeroTables &zero_tables()
{
    static ZeroTables tables;
    return tables;
}

} // namespace

double bessel_j_series(int order, double x)
{
    check_order(order, 0, 2);
    return odd_sign(order, x, series(order, std::fabs(static_cast<real>(x))));
}

double bessel_j_asymptotic(int order, double x)
{
    check_order(order, 0, 2);
    if (x == 0.0)
        throw std::domain_error("asymptotic Bessel expansion is undefined at 0");
    return odd_sign(order, x, asymptotic(order, std::fabs(static_cast<real>(x))));
}

double bessel_j(int order, double x)
{
    check_order(order, 0, 2);
    if (!std::isfinite(x))
        throw std::domain_error("Bessel argument must be finite");
    const real ax = std::fabs(static_cast<real>(x));
    const real value = ax <= series_crossover ? series(order, ax) : asymptotic(order, ax);
    return odd_sign(order, x, value);
}

double bessel_zero(int order, std::size_t n)
{
    check_order(order, 1, 2);
    return zero_tables().get(order, n);
}

BesselZeroTable zero_table(int order, std::size_t count)
{
    check_order(order, 1, 2);
    BesselZeroTable table{order, {}};
    table.zeros.reserve(count);
    for (std::size_t n = 1; n <= count; ++n)
        table.zeros.push_back(bessel_zero(order, n));
    return table;
}

double extrema_envelope(std::size_t n)
{
    const double zero = bessel_zero(2, n);
    return std::fabs(bessel_j(1, zero)) / zero;
}

} // namespace lis::specfun
