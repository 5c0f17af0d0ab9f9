// SPDX-License-Identifier: Apache-2.0
//
// uavris: RIS-assisted 3D connectivity simulator for UAV links
// Copyright (C) 2026 The uavris authors
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

#ifndef UAVRIS_CHANNEL_HPP
#define UAVRIS_CHANNEL_HPP

#include "uavris/arrays.hpp"
#include "uavris/geometry.hpp"

#include <Eigen/Dense>

namespace uavris
{
    inline constexpr double kSpeedOfLight = 3.0e8; // [m/s]

    double wavelength_of(double carrier_hz);

    // Linear power attenuation of a link (>= 1 except for sub-meter links at low carrier)
    struct PathLoss
    {
        double value = 1.0;
    };

    // Free-space loss  rho = d^2 f^2 / 10^8.755  with d in meters and f in kHz.
    // Throws InvalidParameter for non-positive distance or carrier.
    PathLoss free_space_path_loss(double distance, double carrier_hz);

    // Line-of-sight MIMO channel  amplitude * exp(j phase) * rx_steering * tx_steering^H
    struct RankOneChannel
    {
        double amplitude = 0.0; // sqrt(N_tx N_rx / rho)
        double phase = 0.0;     // carrier phase over the path, -2pi d / lambda wrapped to [0, 2pi)
        SteeringVector rx_steering;
        SteeringVector tx_steering;
        LinkGeometry geometry;
        PathLoss path_loss;

        Eigen::Index num_rx() const { return rx_steering.size(); }
        Eigen::Index num_tx() const { return tx_steering.size(); }

        // amplitude^2 = N_tx N_rx / rho
        double power_gain() const { return amplitude * amplitude; }
        cdouble coefficient() const { return std::polar(amplitude, phase); }
    };

    // Both steering vectors use the angles of the tx -> rx direction.
    // A ULA endpoint responds to elevation minus its tilt; a UPA endpoint to (azimuth, elevation).
    RankOneChannel build_channel(const ArrayConfig &tx_array, const ArrayConfig &rx_array,
                                 const Position3D &tx_pos, const Position3D &rx_pos, double carrier_hz);

    // N_rx x N_tx matrix. Validation path only; rates use the rank-one factors.
    Eigen::MatrixXcd materialize(const RankOneChannel &ch);
}

#endif
