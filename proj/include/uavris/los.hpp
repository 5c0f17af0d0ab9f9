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

#ifndef UAVRIS_LOS_HPP
#define UAVRIS_LOS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uavris
{
    // Built-up area statistics driving the blockage model
    struct Environment
    {
        double alpha = 0.0; // fraction of land covered by buildings, [0, 1]
        double kappa = 0.0; // buildings per km^2
        double gamma = 0.0; // building height distribution parameter [m]
        std::string name;

        void validate() const;
        friend bool operator==(const Environment &, const Environment &) = default;
    };

    namespace environments
    {
        Environment suburban();
        Environment urban();
        Environment dense_urban();
        Environment highrise_urban();

        // Presets in order of decreasing LoS availability
        std::vector<Environment> all();

        // Accepts "suburban", "urban", "dense-urban", "highrise-urban" ('_' or ' ' also allowed)
        std::optional<Environment> by_name(std::string_view name);
    }

    // floor(r sqrt(alpha kappa)) - 1, with r in km. -1 means no building in between.
    int building_count(double ground_distance_km, const Environment &env);

    // Product over the M+1 buildings of the probability that each one is shorter than the
    // straight line between endpoints at heights h_tx and h_rx. Returns 1 when M = -1.
    double los_probability(double h_tx, double h_rx, double ground_distance_km, const Environment &env);
}

#endif
