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

#include <cstdint>

namespace lis
{

/// Wavenumber kappa = 2 pi / lambda.
double wavenumber(double wavelength);

/// User coordinate in meters. Users sit in the half-space z > 0 above the LIS plane.
class UserPosition
{
  public:
    UserPosition(double x, double y, double z);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

  private:
    double x_, y_, z_;
};

/// Circular LIS aperture lying in the z = 0 plane.
class LisUnit
{
  public:
    LisUnit(double center_x, double center_y, double radius, int unit_id = 0);

    double center_x() const { return cx_; }
    double center_y() const { return cy_; }
    double radius() const { return radius_; }
    int unit_id() const { return id_; }
    double area() const;

  private:
    double cx_, cy_, radius_;
    int id_;
};

/// Direction cosines of the user as seen from a unit center.
struct DirectionCosines
{
    double cx, cy, cz;
};

/// Direction-cosine differences of a user pair at one unit.
/// chi = sqrt(eta^2 + xi^2) is the argument scale of the LIS response.
struct PairCoupling
{
    double eta = 0.0;
    double xi = 0.0;
    double chi = 0.0;
};

/// Distance from the user to the unit center.
double effective_distance(const UserPosition &user, const LisUnit &unit);

/// Free-space path loss (1 / (2 kappa d))^2. Throws std::domain_error on nonpositive inputs.
double path_loss(double wavelength, double distance);

/// 8 R^2 / lambda.
double fraunhofer_distance(double wavelength, double radius);

/// Strictly beyond the Fraunhofer distance.
bool fraunhofer_valid(double wavelength, double radius, double distance);

DirectionCosines direction_cosines(const UserPosition &user, const LisUnit &unit);

PairCoupling pair_coupling(const UserPosition &user_k, const UserPosition &user_k2, const LisUnit &unit);

} // namespace lis
