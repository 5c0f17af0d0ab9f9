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

#include "uavris/arrays.hpp"

#include "uavris/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace uavris
{
    namespace
    {
        void require_wavelength(double wavelength)
        {
            if (!(wavelength > 0.0) || !std::isfinite(wavelength))
                throw InvalidParameter("wavelength must be positive, got " + std::to_string(wavelength));
        }
    }

    void UlaConfig::validate() const
    {
        require(num_elements >= 1, "ULA needs at least one element");
        require(spacing > 0.0 && std::isfinite(spacing), "ULA element spacing must be positive");
        require(std::isfinite(tilt), "ULA tilt must be finite");
    }

    void UpaConfig::validate() const
    {
        require(num_x >= 1 && num_y >= 1, "UPA needs at least one element per axis");
        require(spacing_x > 0.0 && std::isfinite(spacing_x), "UPA x spacing must be positive");
        require(spacing_y > 0.0 && std::isfinite(spacing_y), "UPA y spacing must be positive");
    }

    int element_count(const ArrayConfig &array)
    {
        return std::visit([](const auto &cfg) { return cfg.size(); }, array);
    }

    void validate(const ArrayConfig &array)
    {
        std::visit([](const auto &cfg) { cfg.validate(); }, array);
    }

    UlaConfig half_wave_ula(int num_elements, double wavelength, double tilt)
    {
        return {num_elements, wavelength / 2.0, tilt};
    }

    UpaConfig half_wave_upa(int num_x, int num_y, double wavelength)
    {
        return {num_x, num_y, wavelength / 2.0, wavelength / 2.0};
    }

    cdouble SteeringVector::inner(const SteeringVector &other) const
    {
        if (size() != other.size())
            throw InvalidParameter("steering vectors differ in length");
        return entries_.dot(other.entries_); // Eigen's dot conjugates the left operand
    }

    SteeringVector upa_response(const UpaConfig &cfg, double azimuth, double elevation, double wavelength)
    {
        require_wavelength(wavelength);
        cfg.validate();

        const double k = 2.0 * std::numbers::pi / wavelength;
        const double sin_el = std::sin(elevation);
        const double step_x = k * cfg.spacing_x * std::cos(azimuth) * sin_el;
        const double step_y = k * cfg.spacing_y * std::sin(azimuth) * sin_el;
        const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.size()));

        Eigen::VectorXcd v(cfg.size());
        for (int m = 0; m < cfg.num_x; ++m)
            for (int n = 0; n < cfg.num_y; ++n)
                v[m * cfg.num_y + n] = std::polar(scale, step_x * m + step_y * n);
        return SteeringVector(std::move(v));
    }

    SteeringVector ula_response(const UlaConfig &cfg, double departure_elevation, double wavelength)
    {
        require_wavelength(wavelength);
        cfg.validate();

        const double k = 2.0 * std::numbers::pi / wavelength;
        const double step = k * cfg.spacing * std::cos(departure_elevation - cfg.tilt);
        const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.num_elements));

        Eigen::VectorXcd v(cfg.num_elements);
        for (int n = 0; n < cfg.num_elements; ++n)
            v[n] = std::polar(scale, step * n);
        return SteeringVector(std::move(v));
    }

    SteeringVector array_response(const ArrayConfig &array, const LinkGeometry &g, double wavelength)
    {
        if (const auto *ula = std::get_if<UlaConfig>(&array))
            return ula_response(*ula, g.elevation, wavelength);
        return upa_response(std::get<UpaConfig>(array), g.azimuth, g.elevation, wavelength);
    }
}
