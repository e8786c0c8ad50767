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

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace lis
{

namespace
{

GaussLegendreRule build_rule(int n)
{
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i)
    {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it)
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k)
            {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k)
            {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1)
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

struct UserFrame
{
    double base_phase; // kappa d^c + varphi
    double slope;      // kappa cos(phi)
    double cos_alpha;
    double sin_alpha;
};

UserFrame frame(const UserPosition &user, const LisUnit &unit, double wavelength, PhaseState phase)
{
    const double kappa = wavenumber(wavelength);
    const double dx = user.x() - unit.center_x();
    const double dy = user.y() - unit.center_y();
    const double ground = std::hypot(dx, dy);
    const double dist = std::hypot(ground, user.z());
    // Elevation angle phi from the plane, projection angle alpha with tan(alpha) = dx / dy.
    const double elevation = std::atan2(user.z(), ground);
    const double alpha = std::atan2(dx, dy);
    return {kappa * dist + phase.varphi(), kappa * std::cos(elevation), std::cos(alpha), std::sin(alpha)};
}

double frame_phase(const UserFrame &f, double x, double y)
{
    const double offset = y * f.cos_alpha - x * f.sin_alpha;
    return f.base_phase + f.slope * offset;
}

} // namespace

const GaussLegendreRule &gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[n];
    if (!slot)
        slot = std::make_unique<GaussLegendreRule>(build_rule(n));
    return *slot;
}

double planar_phase(const UserPosition &user, const LisUnit &unit, double wavelength, PhaseState phase, double x,
                    double y)
{
    return frame_phase(frame(user, unit, wavelength, phase), x, y);
}

double spherical_phase(const UserPosition &user, const LisUnit &unit, double wavelength, PhaseState phase, double x,
                       double y)
{
    const double dx = user.x() - (unit.center_x() + x);
    const double dy = user.y() - (unit.center_y() + y);
    return wavenumber(wavelength) * std::sqrt(dx * dx + dy * dy + user.z() * user.z()) + phase.varphi();
}

std::complex<double> disk_integral(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit,
                                   double wavelength, PhaseState phase_k, PhaseState phase_k2, QuadratureGrid grid)
{
    if (grid.radial < 1 || grid.angular < 1)
        throw std::invalid_argument("quadrature grid must be nonempty");
    const UserFrame fk = frame(user_k, unit, wavelength, phase_k);
    const UserFrame fk2 = frame(user_k2, unit, wavelength, phase_k2);
    const GaussLegendreRule &rule = gauss_legendre(grid.radial);
    const double radius = unit.radius();

    std::vector<double> cos_t(static_cast<std::size_t>(grid.angular));
    std::vector<double> sin_t(static_cast<std::size_t>(grid.angular));
    for (int j = 0; j < grid.angular; ++j)
    {
        const double theta = 2.0 * std::numbers::pi * j / grid.angular;
        cos_t[static_cast<std::size_t>(j)] = std::cos(theta);
        sin_t[static_cast<std::size_t>(j)] = std::sin(theta);
    }

    // h_k^* h_k' = exp(j (phase_k - phase_k')).
    double re = 0.0, im = 0.0;
    for (int i = 0; i < grid.radial; ++i)
    {
        const double r = 0.5 * radius * (rule.nodes[static_cast<std::size_t>(i)] + 1.0);
        double ring_re = 0.0, ring_im = 0.0;
        for (int j = 0; j < grid.angular; ++j)
        {
            const double x = r * cos_t[static_cast<std::size_t>(j)];
            const double y = r * sin_t[static_cast<std::size_t>(j)];
            const double phase = frame_phase(fk, x, y) - frame_phase(fk2, x, y);
            ring_re += std::cos(phase);
            ring_im += std::sin(phase);
        }
        const double w = 0.5 * radius * rule.weights[static_cast<std::size_t>(i)] * r;
        re += w * ring_re;
        im += w * ring_im;
    }
    const double dtheta = 2.0 * std::numbers::pi / grid.angular;
    return {re * dtheta, im * dtheta};
}

int resolving_grid(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit, double wavelength)
{
    const UserFrame fk = frame(user_k, unit, wavelength, PhaseState{});
    const UserFrame fk2 = frame(user_k2, unit, wavelength, PhaseState{});
    // Spatial frequency of the phase difference across the aperture.
    const double gx = fk.slope * fk.sin_alpha - fk2.slope * fk2.sin_alpha;
    const double gy = fk.slope * fk.cos_alpha - fk2.slope * fk2.cos_alpha;
    const double scale = unit.radius() * std::hypot(gx, gy);
    return static_cast<int>(std::ceil(scale)) + 32;
}

QuadratureResult effective_channel_quadrature(const UserPosition &user_k, const UserPosition &user_k2,
                                              const LisUnit &unit, double wavelength, PhaseState phase_k,
                                              PhaseState phase_k2, int grid_n, double tolerance, int max_grid)
{
    if (grid_n < 64)
        throw std::invalid_argument("quadrature grid_n must be at least 64");
    const int needed = resolving_grid(user_k, user_k2, unit, wavelength);
    const double floor = 1e-12 * unit.area();

    QuadratureResult result;
    result.accuracy_warning = grid_n < needed;
    QuadratureGrid grid{grid_n / 2, grid_n};
    std::complex<double> previous = disk_integral(user_k, user_k2, unit, wavelength, phase_k, phase_k2, grid);
    for (;;)
    {
        if (grid.angular * 2 > max_grid)
        {
            result.accuracy_warning = true;
            result.value = previous;
            break;
        }
        const QuadratureGrid finer{grid.radial * 2, grid.angular * 2};
        const auto current = disk_integral(user_k, user_k2, unit, wavelength, phase_k, phase_k2, finer);
        ++result.refinements;
        result.last_change = std::abs(current - previous);
        grid = finer;
        previous = current;
        const bool resolved = grid.angular / 2 >= needed;
        if (resolved && result.last_change <= std::max(tolerance * std::abs(current), floor))
        {
            result.value = current;
            break;
        }
    }
    result.grid = grid;
    return result;
}

} // namespace lis
