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

#ifndef UAVRIS_LINKRATE_HPP
#define UAVRIS_LINKRATE_HPP

#include "uavris/arrays.hpp"
#include "uavris/beamforming.hpp"
#include "uavris/channel.hpp"
#include "uavris/geometry.hpp"
#include "uavris/los.hpp"

#include <Eigen/Dense>

namespace uavris
{
    // Column coherence above which the two-stream closed form is reported as unreliable
    inline constexpr double kCoherenceLimit = 0.1;

    // Thermal noise power in watts: psd [dBm/Hz] + 10 log10(B) + NF
    double thermal_noise_power(double bandwidth_hz, double noise_figure_db, double noise_psd_dbm_per_hz = -174.0);
    double dbm_to_watts(double dbm);

    struct Scenario
    {
        Position3D bs_position{0.0, 0.0, 10.0};
        Position3D ris_position{0.5, 0.5, 9.5};
        ArrayConfig bs_array;
        UpaConfig ris_array;
        UpaConfig uav_array;
        double carrier_hz = 28.0e9;
        double bandwidth_hz = 20.0e6;
        Environment environment;
        double tx_power = 1.0;       // [W]
        double noise_power = 0.0;    // [W]
        bool ris_enabled = true;

        void validate() const;

        // Defaults: 64-element vertical half-wave ULA tilted by pi/3, 20x20 RIS, 8x8 UAV UPA,
        // BS at (0, 0, 10), RIS at (0.5, 0.5, 9.5), 20 MHz, urban, 30 dBm, 9 dB noise figure
        static Scenario defaults(double carrier_hz = 28.0e9);
    };

    struct LinkReport
    {
        Position3D uav_position;
        double p_los_bu = 0.0;
        double p_los_ru = 0.0;
        double r1 = 0.0; // [bit/s/Hz]
        double r2 = 0.0;
        double r3 = 0.0;
        double r_avg = 0.0;
        double throughput = 0.0; // [bit/s]
        // Case-1 design columns are far from orthogonal, so r1 is an optimistic approximation
        bool degenerate_flag = false;
        // With the RIS enabled, r1 < r2 would let the RIS lower the average rate
        bool dominance_flag = false;
    };

    // Probabilities of the four indicator patterns (both, direct only, RIS only, none)
    struct CaseWeights
    {
        double both = 0.0;
        double direct_only = 0.0;
        double ris_only = 0.0;
        double none = 0.0;

        double sum() const { return both + direct_only + ris_only + none; }
    };
    CaseWeights case_weights(double p_los_bu, double p_los_ru);

    LinkChannels build_link_channels(const Scenario &scenario, const Position3D &uav_position);

    // I_BU H_BU + I_RU H_RU diag(profile) H_BR, materialized. Validation path only.
    Eigen::MatrixXcd end_to_end_channel(const LinkChannels &channels, bool los_bu, bool los_ru,
                                        const RisPhaseProfile &profile);

    // Probability-weighted average of the segmented rate at one UAV position.
    // With the RIS disabled only the direct link contributes and r1, r3 are reported as 0.
    LinkReport evaluate_link(const Scenario &scenario, const Position3D &uav_position);

    // Exact log-det rates of the three designs on materialized channels
    struct ExactRates
    {
        double r1 = 0.0;
        double r2 = 0.0;
        double r3 = 0.0;
        double coherence = 0.0;
    };
    ExactRates exact_link_rates(const Scenario &scenario, const Position3D &uav_position);
}

#endif
