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

#ifndef UAVRIS_CONFIG_HPP
#define UAVRIS_CONFIG_HPP

#include "uavris/experiments.hpp"
#include "uavris/geometry.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uavris
{
    enum class ExperimentKind
    {
        Cdf,
        Heatmap,
        Single
    };

    enum class RisMode
    {
        On,
        Off,
        Both
    };

    enum class BsArrayKind
    {
        Ula,
        Upa
    };

    std::string to_string(ExperimentKind kind);
    std::string to_string(RisMode mode);
    std::string to_string(BsArrayKind kind);
    std::optional<ExperimentKind> parse_experiment_kind(std::string_view text);
    std::optional<RisMode> parse_ris_mode(std::string_view text);

    // Config failure with the offending key and its 1-based line (0 when not from a file)
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string key, int line, const std::string &message);

        const std::string &key() const { return key_; }
        int line() const { return line_; }

    private:
        std::string key_;
        int line_;
    };

    // Everything the command-line tool needs, in user-facing units (degrees, dBm, Hz).
    // Omitted keys keep the defaults below.
    struct RunConfig
    {
        ExperimentKind experiment = ExperimentKind::Cdf;
        RisMode ris = RisMode::On;
        std::uint64_t seed = 1;
        unsigned threads = 0;
        std::string output_dir;

        Position3D bs_position{0.0, 0.0, 10.0};
        Position3D ris_position{0.5, 0.5, 9.5};
        BsArrayKind bs_array = BsArrayKind::Ula;
        int bs_elements = 64;  // ULA element count
        int bs_upa_x = 8;      // used when bs_array = upa
        int bs_upa_y = 8;
        double tilt_deg = 60.0;
        int ris_x = 20;
        int ris_y = 20;
        int uav_x = 8;
        int uav_y = 8;
        double spacing_wavelengths = 0.5;

        double carrier_hz = 28.0e9;
        double bandwidth_hz = 20.0e6;
        std::string environment = "urban";
        std::optional<double> alpha; // overrides of the preset's values
        std::optional<double> kappa;
        std::optional<double> gamma;
        double tx_power_dbm = 30.0;
        double noise_figure_db = 9.0;
        double noise_psd_dbm_hz = -174.0;

        std::size_t samples = 10000;
        std::optional<Interval> x_range; // default [100, 1000] m above 6 GHz, [100, 2000] m below
        std::optional<Interval> y_range;
        double z_m = 100.0;
        double grid_step_m = 25.0;
        Position3D uav_position{500.0, 500.0, 100.0};

        friend bool operator==(const RunConfig &, const RunConfig &) = default;

        // Throws ConfigError naming the first key out of range
        void validate() const;

        Interval resolved_x_range() const;
        Interval resolved_y_range() const;
        Environment resolved_environment() const;
        Scenario scenario(bool ris_enabled) const;
        CdfExperimentSpec cdf_spec(bool ris_enabled) const;
        HeatmapExperimentSpec heatmap_spec() const;
    };

    // Parses "key = value" lines; '#' starts a comment; vectors are comma-separated.
    // Unknown keys, syntax errors and range violations throw ConfigError.
    RunConfig parse_config(std::string_view text);

    // Every key, one per line, doubles with 17 significant digits; parse_config inverts it
    std::string serialize_config(const RunConfig &config);

    std::string format_double(double value);
}

#endif
