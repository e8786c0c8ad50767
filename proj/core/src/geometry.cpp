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

#include "lislink/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lis
{

double wavenumber(double wavelength)
{
    if (!(wavelength > 0.0))
        throw std::domain_error("wavelength must be positive");
    return 2.0 * std::numbers::pi / wavelength;
}

UserPosition::UserPosition(double x, double y, double z) : x_(x), y_(y), z_(z)
{
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw std::invalid_argument("user coordinates must be finite");
    if (!(z > 0.0))
        throw std::invalid_argument("users must lie above the LIS plane (z > 0)");
}

LisUnit::LisUnit(double center_x, double center_y, double radius, int unit_id)
    : cx_(center_x), cy_(center_y), radius_(radius), id_(unit_id)
{
    if (!std::isfinite(center_x) || !std::isfinite(center_y))
        throw std::invalid_argument("unit center must be finite");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("LIS radius must be positive");
}

double LisUnit::area() const
{
    return std::numbers::pi * radius_ * radius_;
}

double effective_distance(const UserPosition &user, const LisUnit &unit)
{
    const double dx = user.x() - unit.center_x();
    const double dy = user.y() - unit.center_y();
    return std::sqrt(dx * dx + dy * dy + user.z() * user.z());
}

double path_loss(double wavelength, double distance)
{
    if (!(distance > 0.0))
        throw std::domain_error("distance must be positive");
    const double scale = 2.0 * wavenumber(wavelength) * distance;
    return 1.0 / (scale * scale);
}

double fraunhofer_distance(double wavelength, double radius)
{
    if (!(wavelength > 0.0) || !(radius > 0.0))
        throw std::domain_error("wavelength and radius must be positive");
    return 8.0 * radius * radius / wavelength;
}

bool fraunhofer_valid(double wavelength, double radius, double distance)
{
    return distance > fraunhofer_distance(wavelength, radius);
}

DirectionCosines direction_cosines(const UserPosition &user, const LisUnit &unit)
{
    const double d = effective_distance(user, unit);
    return {(user.x() - unit.center_x()) / d, (user.y() - unit.center_y()) / d, user.z() / d};
}

PairCoupling pair_coupling(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit)
{
    const auto a = direction_cosines(user_k, unit);
    const auto b = direction_cosines(user_k2, unit);
    PairCoupling c;
    c.eta = a.cx - b.cx;
    c.xi = a.cy - b.cy;
    c.chi = std::hypot(c.eta, c.xi);
    return c;
}

} // namespace lis
