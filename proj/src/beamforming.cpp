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

#include "uavris/beamforming.hpp"

#include "uavris/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace uavris
{
    namespace
    {
        const double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

        double log2_1p(double x)
        {
            return std::log1p(x) / std::numbers::ln2;
        }
    }

    Eigen::VectorXcd RisPhaseProfile::diagonal() const
    {
        Eigen::VectorXcd d(static_cast<Eigen::Index>(phases.size()));
        for (std::size_t k = 0; k < phases.size(); ++k)
            d[static_cast<Eigen::Index>(k)] = std::polar(1.0, phases[k]);
        return d;
    }

    Eigen::MatrixXcd RisPhaseProfile::matrix() const
    {
        return diagonal().asDiagonal();
    }

    void LinkBudget::validate() const
    {
        require(tx_power > 0.0 && noise_power > 0.0, "link budget: powers must be positive");
        require(gain_bu > 0.0 && gain_ru > 0.0 && gain_br > 0.0, "link budget: gains must be positive");
    }

    LinkBudget link_budget(double tx_power, double noise_power, const LinkChannels &channels)
    {
        LinkBudget b{tx_power, noise_power, channels.bu.power_gain(), channels.ru.power_gain(),
                     channels.br.power_gain()};
        b.validate();
        return b;
    }

    RisPhaseProfile optimal_ris_phases(const SteeringVector &ris_out_steering, const SteeringVector &ris_in_steering,
                                       double delay_phase_sum)
    {
        if (ris_out_steering.size() != ris_in_steering.size())
            throw InvalidParameter("optimal_ris_phases: steering vectors differ in length (" +
                                   std::to_string(ris_out_steering.size()) + " vs " +
                                   std::to_string(ris_in_steering.size()) + ")");

        RisPhaseProfile profile;
        profile.phases.resize(static_cast<std::size_t>(ris_out_steering.size()));
        for (Eigen::Index k = 0; k < ris_out_steering.size(); ++k)
            profile.phases[static_cast<std::size_t>(k)] =
                std::arg(ris_out_steering[k]) - std::arg(ris_in_steering[k]) + delay_phase_sum;
        return profile;
    }

    RisPhaseProfile optimal_ris_phases(const LinkChannels &channels)
    {
        return optimal_ris_phases(channels.ru.tx_steering, channels.br.rx_steering,
                                  -(channels.ru.phase + channels.br.phase));
    }

    cdouble cascaded_gain(const SteeringVector &ris_out_steering, const SteeringVector &ris_in_steering,
                          const RisPhaseProfile &profile, double amplitude_ru, double amplitude_br, double phase_sum)
    {
        if (static_cast<Eigen::Index>(profile.size()) != ris_out_steering.size() ||
            ris_out_steering.size() != ris_in_steering.size())
            throw InvalidParameter("cascaded_gain: inconsistent RIS dimensions");

        cdouble acc = 0.0;
        for (Eigen::Index k = 0; k < ris_out_steering.size(); ++k)
            acc += std::conj(ris_out_steering[k]) * std::polar(1.0, profile.phases[static_cast<std::size_t>(k)]) *
                   ris_in_steering[k];
        return std::polar(amplitude_ru * amplitude_br, phase_sum) * acc;
    }

    cdouble cascaded_gain(const LinkChannels &channels, const RisPhaseProfile &profile)
    {
        return cascaded_gain(channels.ru.tx_steering, channels.br.rx_steering, profile, channels.ru.amplitude,
                             channels.br.amplitude, channels.ru.phase + channels.br.phase);
    }

    BeamformerPair design_case1(const LinkChannels &channels)
    {
        const Eigen::Index n_uav = channels.bu.num_rx();
        const Eigen::Index n_bs = channels.bu.num_tx();
        if (channels.ru.num_rx() != n_uav || channels.br.num_tx() != n_bs)
            throw InvalidParameter("design_case1: inconsistent array sizes across links");

        BeamformerPair bf;
        bf.combiner.resize(n_uav, 2);
        bf.combiner.col(0) = std::polar(kHalfSqrt2, channels.bu.phase) * channels.bu.rx_steering.entries();
        bf.combiner.col(1) = kHalfSqrt2 * channels.ru.rx_steering.entries();
        bf.precoder.resize(n_bs, 2);
        bf.precoder.col(0) = kHalfSqrt2 * channels.bu.tx_steering.entries();
        bf.precoder.col(1) = kHalfSqrt2 * channels.br.tx_steering.entries();
        return bf;
    }

    BeamformerPair design_case2(const LinkChannels &channels)
    {
        BeamformerPair bf;
        bf.combiner = std::polar(1.0, channels.bu.phase) * channels.bu.rx_steering.entries();
        bf.precoder = channels.bu.tx_steering.entries();
        return bf;
    }

    BeamformerPair design_case3(const LinkChannels &channels)
    {
        BeamformerPair bf;
        bf.combiner = channels.ru.rx_steering.entries();
        bf.precoder = channels.br.tx_steering.entries();
        return bf;
    }

    double rate_case1(const LinkBudget &budget)
    {
        const double quarter_snr = budget.snr() / 4.0;
        return log2_1p(quarter_snr * budget.gain_bu) + log2_1p(quarter_snr * budget.gain_ru * budget.gain_br);
    }

    double rate_case2(const LinkBudget &budget)
    {
        return log2_1p(budget.snr() * budget.gain_bu);
    }

    double rate_case3(const LinkBudget &budget)
    {
        return log2_1p(budget.snr() * budget.gain_ru * budget.gain_br);
    }

    double exact_mimo_rate(const Eigen::MatrixXcd &channel, const Eigen::MatrixXcd &combiner,
                           const Eigen::MatrixXcd &precoder, double tx_power, double noise_power)
    {
        if (combiner.rows() != channel.rows() || precoder.rows() != channel.cols() ||
            combiner.cols() != precoder.cols())
            throw InvalidParameter("exact_mimo_rate: dimension mismatch (H " + std::to_string(channel.rows()) + "x" +
                                   std::to_string(channel.cols()) + ", W " + std::to_string(combiner.rows()) + "x" +
                                   std::to_string(combiner.cols()) + ", F " + std::to_string(precoder.rows()) + "x" +
                                   std::to_string(precoder.cols()) + ")");
        require(tx_power >= 0.0 && noise_power > 0.0, "exact_mimo_rate: invalid powers");

        const Eigen::MatrixXcd effective = combiner.adjoint() * channel * precoder;
        const Eigen::Index s = effective.rows();
        const Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(s, s) +
                                      (tx_power / noise_power) * effective * effective.adjoint();

        // Hermitian positive definite: log det = 2 sum log L_ii
        const Eigen::LLT<Eigen::MatrixXcd> llt(gram);
        if (llt.info() != Eigen::Success)
            throw InvalidParameter("exact_mimo_rate: Gram matrix is not positive definite");
        double log_det = 0.0;
        for (Eigen::Index i = 0; i < s; ++i)
            log_det += 2.0 * std::log(llt.matrixL()(i, i).real());
        return log_det / std::numbers::ln2;
    }

    double case1_column_coherence(const LinkChannels &channels)
    {
        const double uav_side = std::abs(channels.bu.rx_steering.inner(channels.ru.rx_steering));
        const double bs_side = std::abs(channels.bu.tx_steering.inner(channels.br.tx_steering));
        return std::max(uav_side, bs_side);
    }
}
