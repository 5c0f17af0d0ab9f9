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

#ifndef UAVRIS_GEOMETRY_HPP
#define UAVRIS_GEOMETRY_HPP

namespace uavris
{
    // Cartesian node position in meters
    struct Position3D
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        friend bool operator==(const Position3D &, const Position3D &) = default;

        Position3D operator+(const Position3D &o) const { return {x + o.x, y + o.y, z + o.z}; }
        Position3D operator-(const Position3D &o) const { return {x - o.x, y - o.y, z - o.z}; }

        bool is_finite() const;
    };

    // Direction and range of a link as seen from the transmitter toward the receiver.
    // Departure and arrival elevations coincide in this model, so a single elevation is kept.
    struct LinkGeometry
    {
        double distance = 0.0;        // 3D distance [m]
        double ground_distance = 0.0; // distance of the x-y projection [m]
        double azimuth = 0.0;         // from +x, counter-clockwise, in (-pi, pi] [rad]
        double elevation = 0.0;       // above the horizontal plane, in [-pi/2, pi/2] [rad]
    };

    // Inverts  rx = tx + d * (cos(az) cos(el), sin(az) cos(el), sin(el)).
    // A vertical link (zero ground distance) reports azimuth 0.
    // Throws DegenerateGeometry for coincident positions, InvalidParameter for non-finite input.
    LinkGeometry link_geometry(const Position3D &tx, const Position3D &rx);

    // Forward relations: the point reached from `origin` along `g`
    Position3D project(const Position3D &origin, const LinkGeometry &g);
}

#endif
