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

#include "uavris/channel.hpp"

#include "uavris/errors.hpp"

#include <cmath>
#include <numbers>

namespace uavris
{
    namespace
    {
        // 10^8.755
        const double kFreeSpaceConstant = std::pow(10.0, 8.755);

        double wrapped_path_phase(double distance, double wavelength)
        {
            const double cycles = distance / wavelength;
            const double fraction = cycles - std::floor(cycles);
            return fraction == 0.0 ? 0.0 : 2.0 * std::numbers::pi * (1.0 - fraction);
        }
    }

    double wavelength_of(double carrier_hz)
    {
        if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
            throw InvalidParameter("carrier frequency must be positive");
        return kSpeedOfLight / carrier_hz;
    }

    PathLoss free_space_path_loss(double distance, double carrier_hz)
    {
        if (!(distance > 0.0) || !std::isfinite(distance))
            throw InvalidParameter("path loss: distance must be positive");
        if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
            throw InvalidParameter("path loss: carrier frequency must be positive");

        const double carrier_khz = carrier_hz / 1.0e3;
        return {distance * distance * carrier_khz * carrier_khz / kFreeSpaceConstant};
    }

    RankOneChannel build_channel(const ArrayConfig &tx_array, const ArrayConfig &rx_array,
                                 const Position3D &tx_pos, const Position3D &rx_pos, double carrier_hz)
    {
        validate(tx_array);
        validate(rx_array);
        const double wavelength = wavelength_of(carrier_hz);

        RankOneChannel ch;
        ch.geometry = link_geometry(tx_pos, rx_pos);
        ch.path_loss = free_space_path_loss(ch.geometry.distance, carrier_hz);
        const double elements = static_cast<double>(element_count(tx_array)) * element_count(rx_array);
        ch.amplitude = std::sqrt(elements / ch.path_loss.value);
        ch.phase = wrapped_path_phase(ch.geometry.distance, wavelength);
        ch.tx_steering = array_response(tx_array, ch.geometry, wavelength);
        ch.rx_steering = array_response(rx_array, ch.geometry, wavelength);
        return ch;
    }

    Eigen::MatrixXcd materialize(const RankOneChannel &ch)
    {
        return ch.coefficient() * ch.rx_steering.entries() * ch.tx_steering.entries().adjoint();
    }
}
