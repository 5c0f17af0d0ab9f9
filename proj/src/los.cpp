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

#include "uavris/los.hpp"

#include "uavris/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace uavris
{
    void Environment::validate() const
    {
        require(alpha >= 0.0 && alpha <= 1.0, "environment alpha must lie in [0, 1]");
        require(kappa > 0.0 && std::isfinite(kappa), "environment kappa must be positive");
        require(gamma > 0.0 && std::isfinite(gamma), "environment gamma must be positive");
    }

    namespace environments
    {
        Environment suburban() { return {0.1, 750.0, 8.0, "suburban"}; }
        Environment urban() { return {0.3, 500.0, 15.0, "urban"}; }
        Environment dense_urban() { return {0.5, 300.0, 20.0, "dense-urban"}; }
        Environment highrise_urban() { return {0.5, 300.0, 50.0, "highrise-urban"}; }

        std::vector<Environment> all()
        {
            return {suburban(), urban(), dense_urban(), highrise_urban()};
        }

        std::optional<Environment> by_name(std::string_view name)
        {
            std::string key(name);
            std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
                return (c == '_' || c == ' ') ? '-' : static_cast<char>(std::tolower(c));
            });
            for (auto &env : all())
                if (env.name == key)
                    return env;
            return std::nullopt;
        }
    }

    int building_count(double ground_distance_km, const Environment &env)
    {
        require(ground_distance_km >= 0.0 && std::isfinite(ground_distance_km),
                "ground distance must be non-negative");
        env.validate();
        return static_cast<int>(std::floor(ground_distance_km * std::sqrt(env.alpha * env.kappa))) - 1;
    }

    double los_probability(double h_tx, double h_rx, double ground_distance_km, const Environment &env)
    {
        require(h_tx >= 0.0 && h_rx >= 0.0, "LoS probability needs non-negative heights");
        const int buildings = building_count(ground_distance_km, env);

        const double two_gamma_sq = 2.0 * env.gamma * env.gamma;
        const double per_building_drop = (h_tx - h_rx) / (buildings + 1);
        double p = 1.0;
        for (int m = 0; m <= buildings; ++m)
        {
            const double h = h_tx - (m + 0.5) * per_building_drop;
            // 1 - exp(-x) without cancellation for small x
            const double clear = -std::expm1(-(h * h) / two_gamma_sq);
            p *= std::clamp(clear, 0.0, 1.0);
            if (p == 0.0)
                break;
        }
        return std::clamp(p, 0.0, 1.0);
    }
}
