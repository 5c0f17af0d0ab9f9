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

#ifndef UAVRIS_BEAMFORMING_HPP
#define UAVRIS_BEAMFORMING_HPP

#include "uavris/arrays.hpp"
#include "uavris/channel.hpp"

#include <Eigen/Dense>
#include <vector>

namespace uavris
{
    // RIS reflection coefficients exp(j phase_k), the diagonal of the phase control matrix
    struct RisPhaseProfile
    {
        std::vector<double> phases; // [rad]

        static RisPhaseProfile zeros(std::size_t n) { return {std::vector<double>(n, 0.0)}; }

        std::size_t size() const { return phases.size(); }
        Eigen::VectorXcd diagonal() const;
        Eigen::MatrixXcd matrix() const;
    };

    // Combiner W (N_U x s) and precoder F (N_B x s), each with unit trace power
    struct BeamformerPair
    {
        Eigen::MatrixXcd combiner;
        Eigen::MatrixXcd precoder;

        Eigen::Index streams() const { return combiner.cols(); }
    };

    // Transmit power, noise power and the three per-link power gains N_tx N_rx / rho
    struct LinkBudget
    {
        double tx_power = 0.0;    // P [W]
        double noise_power = 0.0; // sigma^2 [W]
        double gain_bu = 0.0;     // N_B N_U / rho_BU
        double gain_ru = 0.0;     // N_R N_U / rho_RU
        double gain_br = 0.0;     // N_B N_R / rho_BR

        double snr() const { return tx_power / noise_power; }
        void validate() const;
    };

    // The three links of one BS / RIS / UAV placement
    struct LinkChannels
    {
        RankOneChannel bu; // BS -> UAV
        RankOneChannel ru; // RIS -> UAV
        RankOneChannel br; // BS -> RIS
    };

    LinkBudget link_budget(double tx_power, double noise_power, const LinkChannels &channels);

    // phase_k = arg(out_k) - arg(in_k) + delay_phase_sum.
    // `ris_out_steering` is the RIS-side response toward the UAV, `ris_in_steering` the RIS-side
    // response of the BS -> RIS link. Passing delay_phase_sum = -(phase_RU + phase_BR) makes the
    // cascaded gain real and positive.
    RisPhaseProfile optimal_ris_phases(const SteeringVector &ris_out_steering, const SteeringVector &ris_in_steering,
                                       double delay_phase_sum);

    // Convenience overload using the channels' own steering vectors and path phases
    RisPhaseProfile optimal_ris_phases(const LinkChannels &channels);

    // eta = amp_RU amp_BR exp(j phase_sum) out^H diag(profile) in
    cdouble cascaded_gain(const SteeringVector &ris_out_steering, const SteeringVector &ris_in_steering,
                          const RisPhaseProfile &profile, double amplitude_ru, double amplitude_br, double phase_sum);
    cdouble cascaded_gain(const LinkChannels &channels, const RisPhaseProfile &profile);

    // Two-stream design from the approximate SVD of BS->UAV plus the aligned cascade:
    //   W = (sqrt2/2) [exp(j phase_BU) a_U(BU), a_U(RU)],  F = (sqrt2/2) [a_B(BU), a_B(BR)]
    BeamformerPair design_case1(const LinkChannels &channels);

    // Single-stream matched filters along the rank-one direct link
    BeamformerPair design_case2(const LinkChannels &channels);

    // Single-stream matched filters along the aligned cascade
    BeamformerPair design_case3(const LinkChannels &channels);

    // log2(1 + P/(4 s2) g_BU) + log2(1 + P/(4 s2) g_RU g_BR)
    double rate_case1(const LinkBudget &budget);
    // log2(1 + P/s2 g_BU)
    double rate_case2(const LinkBudget &budget);
    // log2(1 + P/s2 g_RU g_BR)
    double rate_case3(const LinkBudget &budget);

    // log2 det(I_s + P/s2 W^H H F F^H H^H W), from materialized matrices
    double exact_mimo_rate(const Eigen::MatrixXcd &channel, const Eigen::MatrixXcd &combiner,
                           const Eigen::MatrixXcd &precoder, double tx_power, double noise_power);

    // Largest |a^H b| between the two UAV-side and the two BS-side design columns of case 1.
    // The closed-form two-stream rate assumes both are close to zero.
    double case1_column_coherence(const LinkChannels &channels);
}

#endif
