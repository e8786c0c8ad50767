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
#include <vector>

namespace lis::specfun
{

/// Ordered positive zeros j_{m,1} < j_{m,2} < ... of the Bessel function J_m.
struct BesselZeroTable
{
    int order = 1;
    std::vector<double> zeros;
};

/// Bessel function of the first kind J_order(x) for order 0, 1 or 2.
///
/// Ascending power series near the origin and the Hankel asymptotic expansion
/// beyond `series_crossover`, both summed in extended precision. Absolute error
/// stays below 1e-12 for |x| <= 1e4.
///
/// Throws std::domain_error for a non-finite argument or an unsupported order.
double bessel_j(int order, double x);

/// |x| at which bessel_j switches from the power series to the asymptotic expansion.
inline constexpr double series_crossover = 15.0;

/// Power-series and asymptotic branches, exposed so the splice can be checked.
double bessel_j_series(int order, double x);
double bessel_j_asymptotic(int order, double x);

/// n-th positive zero (n >= 1) of J_order, order 1 or 2, absolute error <= 1e-10.
///
/// The first 64 zeros of each order are tabulated on first use; larger n extend
/// the table under a lock. Throws std::length_error when n exceeds max_zero_index.
double bessel_zero(int order, std::size_t n);

inline constexpr std::size_t max_zero_index = 100000;

/// Snapshot of the first `count` zeros of J_order.
BesselZeroTable zero_table(int order, std::size_t count);

/// |J1(j_{2,n})| / j_{2,n}: magnitude of the n-th extremum of J1(x)/x.
double extrema_envelope(std::size_t n);

} // namespace lis::specfun
