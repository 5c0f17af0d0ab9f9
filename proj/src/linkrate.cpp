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

#include "uavris/linkrate.hpp"

#include "uavris/errors.hpp"

#include <cmath>
#include <numbers>

namespace uavris
{
    double dbm_to_watts(double dbm)
    {
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }

    double thermal_noise_power(double bandwidth_hz, double noise_figure_db, double noise_psd_dbm_per_hz)
    {
        require(bandwidth_hz > 0.0, "bandwidth must be positive");
        return dbm_to_watts(noise_psd_dbm_per_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
    }

    void Scenario::validate() const
    {
        require(bs_position.is_finite() && ris_position.is_finite(), "scenario positions must be finite");
        require(bs_position.z >= 0.0 && ris_position.z >= 0.0, "BS and RIS must not be below ground");
        require(!(bs_position == ris_position), "BS and RIS positions coincide");
        uavris::validate(bs_array);
        ris_array.validate();
        uav_array.validate();
        require(carrier_hz > 0.0 && std::isfinite(carrier_hz), "carrier frequency must be positive");
        require(bandwidth_hz > 0.0 && std::isfinite(bandwidth_hz), "bandwidth must be positive");
        environment.validate();
        require(tx_power > 0.0 && noise_power > 0.0, "transmit and noise power must be positive");
    }

    Scenario Scenario::defaults(double carrier_hz)
    {
        const double wavelength = wavelength_of(carrier_hz);
        Scenario s;
        s.bs_array = half_wave_ula(64, wavelength, std::numbers::pi / 3.0);
        s.ris_array = half_wave_upa(20, 20, wavelength);
        s.uav_array = half_wave_upa(8, 8, wavelength);
        s.carrier_hz = carrier_hz;
        s.environment = environments::urban();
        s.tx_power = dbm_to_watts(30.0);
        s.noise_power = thermal_noise_power(s.bandwidth_hz, 9.0);
        return s;
    }

    CaseWeights case_weights(double p_los_bu, double p_los_ru)
    {
        return {p_los_bu * p_los_ru, p_los_bu * (1.0 - p_los_ru), (1.0 - p_los_bu) * p_los_ru,
                (1.0 - p_los_bu) * (1.0 - p_los_ru)};
    }

    LinkChannels build_link_channels(const Scenario &scenario, const Position3D &uav_position)
    {
        const ArrayConfig ris = scenario.ris_array;
        const ArrayConfig uav = scenario.uav_array;
        return {build_channel(scenario.bs_array, uav, scenario.bs_position, uav_position, scenario.carrier_hz),
                build_channel(ris, uav, scenario.ris_position, uav_position, scenario.carrier_hz),
                build_channel(scenario.bs_array, ris, scenario.bs_position, scenario.ris_position,
                              scenario.carrier_hz)};
    }

    Eigen::MatrixXcd end_to_end_channel(const LinkChannels &channels, bool los_bu, bool los_ru,
                                        const RisPhaseProfile &profile)
    {
        const Eigen::Index n_uav = channels.bu.num_rx();
        const Eigen::Index n_bs = channels.bu.num_tx();
        const Eigen::Index n_ris = channels.br.num_rx();
        if (channels.ru.num_rx() != n_uav || channels.br.num_tx() != n_bs || channels.ru.num_tx() != n_ris ||
            static_cast<Eigen::Index>(profile.size()) != n_ris)
            throw InvalidParameter("end_to_end_channel: dimension mismatch");

        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n_uav, n_bs);
        if (los_bu)
            h += materialize(channels.bu);
        if (los_ru)
            h += materialize(channels.ru) * profile.diagonal().asDiagonal() * materialize(channels.br);
        return h;
    }

    LinkReport evaluate_link(const Scenario &scenario, const Position3D &uav_position)
    {
        scenario.validate();
        require(uav_position.is_finite() && uav_position.z > 0.0, "UAV must fly strictly above ground");
        const LinkChannels channels = build_link_channels(scenario, uav_position);
        const LinkBudget budget = link_budget(scenario.tx_power, scenario.noise_power, channels);

        LinkReport report;
        report.uav_position = uav_position;
        report.p_los_bu = los_probability(scenario.bs_position.z, uav_position.z,
                                          channels.bu.geometry.ground_distance / 1.0e3, scenario.environment);
        report.p_los_ru = los_probability(scenario.ris_position.z, uav_position.z,
                                          channels.ru.geometry.ground_distance / 1.0e3, scenario.environment);
        report.r2 = rate_case2(budget);

        if (scenario.ris_enabled)
        {
            report.r1 = rate_case1(budget);
            report.r3 = rate_case3(budget);
            const CaseWeights w = case_weights(report.p_los_bu, report.p_los_ru);
            report.r_avg = report.r1 * w.both + report.r2 * w.direct_only + report.r3 * w.ris_only;
            report.degenerate_flag = case1_column_coherence(channels) > kCoherenceLimit;
            report.dominance_flag = report.r1 < report.r2;
        }
        else
        {
            report.r_avg = report.r2 * report.p_los_bu;
        }
        report.throughput = scenario.bandwidth_hz * report.r_avg;
        return report;
    }

    ExactRates exact_link_rates(const Scenario &scenario, const Position3D &uav_position)
    {
        const LinkChannels channels = build_link_channels(scenario, uav_position);
        const RisPhaseProfile profile = optimal_ris_phases(channels);

        ExactRates out;
        const BeamformerPair bf1 = design_case1(channels);
        out.r1 = exact_mimo_rate(end_to_end_channel(channels, true, true, profile), bf1.combiner, bf1.precoder,
                                 scenario.tx_power, scenario.noise_power);
        const BeamformerPair bf2 = design_case2(channels);
        out.r2 = exact_mimo_rate(end_to_end_channel(channels, true, false, profile), bf2.combiner, bf2.precoder,
                                 scenario.tx_power, scenario.noise_power);
        const BeamformerPair bf3 = design_case3(channels);
        out.r3 = exact_mimo_rate(end_to_end_channel(channels, false, true, profile), bf3.combiner, bf3.precoder,
                                 scenario.tx_power, scenario.noise_power);
        out.coherence = case1_column_coherence(channels);
        return out;
    }
}
