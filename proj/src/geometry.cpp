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

#include "uavris/geometry.hpp"

#include "uavris/errors.hpp"

#include <cmath>
#include <numbers>

namespace uavris
{
    bool Position3D::is_finite() const
    {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    LinkGeometry link_geometry(const Position3D &tx, const Position3D &rx)
    {
        if (!tx.is_finite() || !rx.is_finite())
            throw InvalidParameter("link_geometry: node coordinates must be finite");

        const Position3D delta = rx - tx;
        LinkGeometry g;
        g.ground_distance = std::hypot(delta.x, delta.y);
        g.distance = std::hypot(g.ground_distance, delta.z);
        if (g.distance == 0.0)
            throw DegenerateGeometry("link_geometry: transmitter and receiver coincide");

        if (g.ground_distance > 0.0)
        {
            g.azimuth = std::atan2(delta.y, delta.x);
            if (g.azimuth <= -std::numbers::pi)
                g.azimuth = std::numbers::pi;
        }
        g.elevation = std::atan2(delta.z, g.ground_distance);
        return g;
    }

    Position3D project(const Position3D &origin, const LinkGeometry &g)
    {
        const double horizontal = g.distance * std::cos(g.elevation);
        return {origin.x + horizontal * std::cos(g.azimuth),
                origin.y + horizontal * std::sin(g.azimuth),
                origin.z + g.distance * std::sin(g.elevation)};
    }
}
