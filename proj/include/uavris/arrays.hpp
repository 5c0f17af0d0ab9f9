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

#ifndef UAVRIS_ARRAYS_HPP
#define UAVRIS_ARRAYS_HPP

#include "uavris/geometry.hpp"

#include <Eigen/Dense>
#include <complex>
#include <variant>

namespace uavris
{
    using cdouble = std::complex<double>;

    // Vertical uniform linear array, mechanically down-tilted (clockwise) by `tilt`
    struct UlaConfig
    {
        int num_elements = 1;
        double spacing = 0.0; // [m]
        double tilt = 0.0;    // [rad]

        int size() const { return num_elements; }
        void validate() const;
        friend bool operator==(const UlaConfig &, const UlaConfig &) = default;
    };

    // Uniform planar array parallel to the x-y plane
    struct UpaConfig
    {
        int num_x = 1;
        int num_y = 1;
        double spacing_x = 0.0; // [m]
        double spacing_y = 0.0; // [m]

        int size() const { return num_x * num_y; }
        void validate() const;
        friend bool operator==(const UpaConfig &, const UpaConfig &) = default;
    };

    using ArrayConfig = std::variant<UlaConfig, UpaConfig>;

    int element_count(const ArrayConfig &array);
    void validate(const ArrayConfig &array);

    // Half-wavelength helpers
    UlaConfig half_wave_ula(int num_elements, double wavelength, double tilt);
    UpaConfig half_wave_upa(int num_x, int num_y, double wavelength);

    // Unit-norm array response. Entries have modulus 1/sqrt(N); the first entry is 1/sqrt(N).
    class SteeringVector
    {
    public:
        SteeringVector() = default;
        explicit SteeringVector(Eigen::VectorXcd entries) : entries_(std::move(entries)) {}

        const Eigen::VectorXcd &entries() const { return entries_; }
        Eigen::Index size() const { return entries_.size(); }
        cdouble operator[](Eigen::Index i) const { return entries_[i]; }

        // this^H * other
        cdouble inner(const SteeringVector &other) const;

    private:
        Eigen::VectorXcd entries_;
    };

    // Entry (m, n) at index m * num_y + n:
    //   exp(j 2pi/lambda (dx m cos(az) sin(el) + dy n sin(az) sin(el))) / sqrt(N)
    // i.e. the Kronecker product of the x-axis factor with the y-axis factor.
    SteeringVector upa_response(const UpaConfig &cfg, double azimuth, double elevation, double wavelength);

    // Entry n: exp(j 2pi/lambda dz n cos(departure_elevation - tilt)) / sqrt(N)
    SteeringVector ula_response(const UlaConfig &cfg, double departure_elevation, double wavelength);

    // ULA responds to the link elevation only; UPA to (azimuth, elevation)
    SteeringVector array_response(const ArrayConfig &array, const LinkGeometry &g, double wavelength);
}

#endif
