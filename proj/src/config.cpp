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

#include "uavris/config.hpp"

#include "uavris/errors.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace uavris
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split_list(std::string_view s)
        {
            std::vector<std::string_view> out;
            while (true)
            {
                const auto comma = s.find(',');
                out.push_back(trim(s.substr(0, comma)));
                if (comma == std::string_view::npos)
                    break;
                s.remove_prefix(comma + 1);
            }
            return out;
        }

        // Thrown by value parsers; parse_config attaches key and line
        struct BadValue
        {
            std::string message;
        };

        double to_double(std::string_view s)
        {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
                throw BadValue{"expected a number, got '" + std::string(s) + "'"};
            if (!std::isfinite(v))
                throw BadValue{"value must be finite"};
            return v;
        }

        template <typename Int>
        Int to_integer(std::string_view s)
        {
            Int v{};
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
                throw BadValue{"expected an integer, got '" + std::string(s) + "'"};
            return v;
        }

        std::vector<double> to_doubles(std::string_view s, std::size_t expected)
        {
            const auto parts = split_list(s);
            if (parts.size() != expected)
                throw BadValue{"expected " + std::to_string(expected) + " comma-separated numbers"};
            std::vector<double> out;
            for (auto p : parts)
                out.push_back(to_double(p));
            return out;
        }

        std::pair<int, int> to_int_pair(std::string_view s)
        {
            const auto parts = split_list(s);
            if (parts.size() != 2)
                throw BadValue{"expected two comma-separated integers"};
            return {to_integer<int>(parts[0]), to_integer<int>(parts[1])};
        }

        Position3D to_position(std::string_view s)
        {
            const auto v = to_doubles(s, 3);
            return {v[0], v[1], v[2]};
        }

        Interval to_interval(std::string_view s)
        {
            const auto v = to_doubles(s, 2);
            return {v[0], v[1]};
        }

        std::string join(std::initializer_list<double> values)
        {
            std::string out;
            for (double v : values)
            {
                if (!out.empty())
                    out += ", ";
                out += format_double(v);
            }
            return out;
        }

        struct KeySpec
        {
            const char *name;
            std::function<void(RunConfig &, std::string_view)> read;
            std::function<std::optional<std::string>(const RunConfig &)> write;
        };

        const std::vector<KeySpec> &key_table()
        {
            static const std::vector<KeySpec> table = {
                {"experiment",
                 [](RunConfig &c, std::string_view v) {
                     auto k = parse_experiment_kind(v);
                     if (!k)
                         throw BadValue{"expected cdf, heatmap or single"};
                     c.experiment = *k;
                 },
                 [](const RunConfig &c) { return to_string(c.experiment); }},
                {"ris",
                 [](RunConfig &c, std::string_view v) {
                     auto m = parse_ris_mode(v);
                     if (!m)
                         throw BadValue{"expected on, off or both"};
                     c.ris = *m;
                 },
                 [](const RunConfig &c) { return to_string(c.ris); }},
                {"seed", [](RunConfig &c, std::string_view v) { c.seed = to_integer<std::uint64_t>(v); },
                 [](const RunConfig &c) { return std::to_string(c.seed); }},
                {"threads", [](RunConfig &c, std::string_view v) { c.threads = to_integer<unsigned>(v); },
                 [](const RunConfig &c) { return std::to_string(c.threads); }},
                {"output_dir", [](RunConfig &c, std::string_view v) { c.output_dir = std::string(v); },
                 [](const RunConfig &c) -> std::optional<std::string> {
                     if (c.output_dir.empty())
                         return std::nullopt;
                     return c.output_dir;
                 }},
                {"bs_position", [](RunConfig &c, std::string_view v) { c.bs_position = to_position(v); },
                 [](const RunConfig &c) { return join({c.bs_position.x, c.bs_position.y, c.bs_position.z}); }},
                {"ris_position", [](RunConfig &c, std::string_view v) { c.ris_position = to_position(v); },
                 [](const RunConfig &c) { return join({c.ris_position.x, c.ris_position.y, c.ris_position.z}); }},
                {"bs_array",
                 [](RunConfig &c, std::string_view v) {
                     if (v == "ula")
                         c.bs_array = BsArrayKind::Ula;
                     else if (v == "upa")
                         c.bs_array = BsArrayKind::Upa;
                     else
                         throw BadValue{"expected ula or upa"};
                 },
                 [](const RunConfig &c) { return to_string(c.bs_array); }},
                {"bs_elements", [](RunConfig &c, std::string_view v) { c.bs_elements = to_integer<int>(v); },
                 [](const RunConfig &c) { return std::to_string(c.bs_elements); }},
                {"bs_upa",
                 [](RunConfig &c, std::string_view v) { std::tie(c.bs_upa_x, c.bs_upa_y) = to_int_pair(v); },
                 [](const RunConfig &c) { return std::to_string(c.bs_upa_x) + ", " + std::to_string(c.bs_upa_y); }},
                {"tilt_deg", [](RunConfig &c, std::string_view v) { c.tilt_deg = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.tilt_deg); }},
                {"ris_elements", [](RunConfig &c, std::string_view v) { std::tie(c.ris_x, c.ris_y) = to_int_pair(v); },
                 [](const RunConfig &c) { return std::to_string(c.ris_x) + ", " + std::to_string(c.ris_y); }},
                {"uav_elements", [](RunConfig &c, std::string_view v) { std::tie(c.uav_x, c.uav_y) = to_int_pair(v); },
                 [](const RunConfig &c) { return std::to_string(c.uav_x) + ", " + std::to_string(c.uav_y); }},
                {"spacing_wavelengths", [](RunConfig &c, std::string_view v) { c.spacing_wavelengths = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.spacing_wavelengths); }},
                {"carrier_hz", [](RunConfig &c, std::string_view v) { c.carrier_hz = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.carrier_hz); }},
                {"bandwidth_hz", [](RunConfig &c, std::string_view v) { c.bandwidth_hz = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.bandwidth_hz); }},
                {"environment", [](RunConfig &c, std::string_view v) { c.environment = std::string(v); },
                 [](const RunConfig &c) { return c.environment; }},
                {"alpha", [](RunConfig &c, std::string_view v) { c.alpha = to_double(v); },
                 [](const RunConfig &c) -> std::optional<std::string> {
                     if (!c.alpha)
                         return std::nullopt;
                     return format_double(*c.alpha);
                 }},
                {"kappa", [](RunConfig &c, std::string_view v) { c.kappa = to_double(v); },
                 [](const RunConfig &c) -> std::optional<std::string> {
                     if (!c.kappa)
                         return std::nullopt;
                     return format_double(*c.kappa);
                 }},
                {"gamma", [](RunConfig &c, std::string_view v) { c.gamma = to_double(v); },
                 [](const RunConfig &c) -> std::optional<std::string> {
                     if (!c.gamma)
                         return std::nullopt;
                     return format_double(*c.gamma);
                 }},
                {"tx_power_dbm", [](RunConfig &c, std::string_view v) { c.tx_power_dbm = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.tx_power_dbm); }},
                {"noise_figure_db", [](RunConfig &c, std::string_view v) { c.noise_figure_db = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.noise_figure_db); }},
                {"noise_psd_dbm_hz", [](RunConfig &c, std::string_view v) { c.noise_psd_dbm_hz = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.noise_psd_dbm_hz); }},
                {"samples", [](RunConfig &c, std::string_view v) { c.samples = to_integer<std::size_t>(v); },
                 [](const RunConfig &c) { return std::to_string(c.samples); }},
                {"x_range", [](RunConfig &c, std::string_view v) { c.x_range = to_interval(v); },
                 [](const RunConfig &c) -> std::optional<std::string> {
                     if (!c.x_range)
                         return std::nullopt;
                     return join({c.x_range->lo, c.x_range->hi});
                 }},
                {"y_range", [](RunConfig &c, std::string_view v) { c.y_range = to_interval(v); },
                 [](const RunConfig &c) -> std::optional<std::string> {
                     if (!c.y_range)
                         return std::nullopt;
                     return join({c.y_range->lo, c.y_range->hi});
                 }},
                {"z_m", [](RunConfig &c, std::string_view v) { c.z_m = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.z_m); }},
                {"grid_step_m", [](RunConfig &c, std::string_view v) { c.grid_step_m = to_double(v); },
                 [](const RunConfig &c) { return format_double(c.grid_step_m); }},
                {"uav_position", [](RunConfig &c, std::string_view v) { c.uav_position = to_position(v); },
                 [](const RunConfig &c) { return join({c.uav_position.x, c.uav_position.y, c.uav_position.z}); }},
            };
            return table;
        }

        const KeySpec *find_key(std::string_view name)
        {
            for (const auto &k : key_table())
                if (name == k.name)
                    return &k;
            return nullptr;
        }

        void check(bool condition, const char *key, const std::string &message)
        {
            if (!condition)
                throw ConfigError(key, 0, message);
        }
    }

    std::string to_string(ExperimentKind kind)
    {
        switch (kind)
        {
        case ExperimentKind::Cdf:
            return "cdf";
        case ExperimentKind::Heatmap:
            return "heatmap";
        case ExperimentKind::Single:
            return "single";
        }
        return "cdf";
    }

    std::string to_string(RisMode mode)
    {
        switch (mode)
        {
        case RisMode::On:
            return "on";
        case RisMode::Off:
            return "off";
        case RisMode::Both:
            return "both";
        }
        return "on";
    }

    std::string to_string(BsArrayKind kind)
    {
        return kind == BsArrayKind::Ula ? "ula" : "upa";
    }

    std::optional<ExperimentKind> parse_experiment_kind(std::string_view text)
    {
        if (text == "cdf")
            return ExperimentKind::Cdf;
        if (text == "heatmap")
            return ExperimentKind::Heatmap;
        if (text == "single" || text == "single-link")
            return ExperimentKind::Single;
        return std::nullopt;
    }

    std::optional<RisMode> parse_ris_mode(std::string_view text)
    {
        if (text == "on")
            return RisMode::On;
        if (text == "off")
            return RisMode::Off;
        if (text == "both")
            return RisMode::Both;
        return std::nullopt;
    }

    ConfigError::ConfigError(std::string key, int line, const std::string &message)
        : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                             (key.empty() ? std::string() : "key '" + key + "': ") + message),
          key_(std::move(key)), line_(line)
    {
    }

    std::string format_double(double value)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
        return std::string(buf, ptr);
    }

    void RunConfig::validate() const
    {
        auto finite = [](const Position3D &p) { return p.is_finite(); };
        check(finite(bs_position) && bs_position.z >= 0.0, "bs_position", "must be finite with z >= 0");
        check(finite(ris_position) && ris_position.z >= 0.0, "ris_position", "must be finite with z >= 0");
        check(!(bs_position == ris_position), "ris_position", "coincides with bs_position");
        check(bs_elements >= 1, "bs_elements", "must be at least 1");
        check(bs_upa_x >= 1 && bs_upa_y >= 1, "bs_upa", "element counts must be at least 1");
        check(std::isfinite(tilt_deg), "tilt_deg", "must be finite");
        check(ris_x >= 1 && ris_y >= 1, "ris_elements", "element counts must be at least 1");
        check(uav_x >= 1 && uav_y >= 1, "uav_elements", "element counts must be at least 1");
        check(spacing_wavelengths > 0.0, "spacing_wavelengths", "must be positive");
        check(carrier_hz > 0.0, "carrier_hz", "must be positive");
        check(bandwidth_hz > 0.0, "bandwidth_hz", "must be positive");
        check(environments::by_name(environment).has_value(), "environment",
              "unknown environment '" + environment + "' (suburban, urban, dense-urban, highrise-urban)");
        check(!alpha || (*alpha >= 0.0 && *alpha <= 1.0), "alpha",
              "value " + (alpha ? format_double(*alpha) : std::string()) + " out of range [0, 1]");
        check(!kappa || *kappa > 0.0, "kappa", "must be positive");
        check(!gamma || *gamma > 0.0, "gamma", "must be positive");
        check(samples >= 1, "samples", "must be at least 1");
        check(!x_range || x_range->hi > x_range->lo, "x_range", "upper bound must exceed lower bound");
        check(!y_range || y_range->hi > y_range->lo, "y_range", "upper bound must exceed lower bound");
        check(z_m > 0.0, "z_m", "UAV altitude must be positive");
        check(grid_step_m > 0.0, "grid_step_m", "must be positive");
        check(uav_position.is_finite() && uav_position.z > 0.0, "uav_position", "must be finite with z > 0");
    }

    Interval RunConfig::resolved_x_range() const
    {
        return x_range.value_or(Interval{100.0, carrier_hz < 6.0e9 ? 2000.0 : 1000.0});
    }

    Interval RunConfig::resolved_y_range() const
    {
        return y_range.value_or(Interval{100.0, carrier_hz < 6.0e9 ? 2000.0 : 1000.0});
    }

    Environment RunConfig::resolved_environment() const
    {
        auto env = environments::by_name(environment);
        if (!env)
            throw ConfigError("environment", 0, "unknown environment '" + environment + "'");
        if (alpha)
            env->alpha = *alpha;
        if (kappa)
            env->kappa = *kappa;
        if (gamma)
            env->gamma = *gamma;
        return *env;
    }

    Scenario RunConfig::scenario(bool ris_enabled) const
    {
        const double wavelength = wavelength_of(carrier_hz);
        const double spacing = spacing_wavelengths * wavelength;
        const double tilt = tilt_deg * std::numbers::pi / 180.0;

        Scenario s;
        s.bs_position = bs_position;
        s.ris_position = ris_position;
        if (bs_array == BsArrayKind::Ula)
            s.bs_array = UlaConfig{bs_elements, spacing, tilt};
        else
            s.bs_array = UpaConfig{bs_upa_x, bs_upa_y, spacing, spacing};
        s.ris_array = {ris_x, ris_y, spacing, spacing};
        s.uav_array = {uav_x, uav_y, spacing, spacing};
        s.carrier_hz = carrier_hz;
        s.bandwidth_hz = bandwidth_hz;
        s.environment = resolved_environment();
        s.tx_power = dbm_to_watts(tx_power_dbm);
        s.noise_power = thermal_noise_power(bandwidth_hz, noise_figure_db, noise_psd_dbm_hz);
        s.ris_enabled = ris_enabled;
        return s;
    }

    CdfExperimentSpec RunConfig::cdf_spec(bool ris_enabled) const
    {
        CdfExperimentSpec spec;
        spec.scenario = scenario(ris_enabled);
        spec.num_samples = samples;
        spec.x_range = resolved_x_range();
        spec.y_range = resolved_y_range();
        spec.z_fixed = z_m;
        spec.seed = seed;
        return spec;
    }

    HeatmapExperimentSpec RunConfig::heatmap_spec() const
    {
        HeatmapExperimentSpec spec;
        spec.scenario = scenario(true);
        const Interval xr = resolved_x_range();
        const Interval yr = resolved_y_range();
        spec.x = {xr.lo, xr.hi, grid_step_m};
        spec.y = {yr.lo, yr.hi, grid_step_m};
        spec.z_fixed = z_m;
        return spec;
    }

    RunConfig parse_config(std::string_view text)
    {
        RunConfig config;
        std::map<std::string, int, std::less<>> seen;
        int line_no = 0;
        while (!text.empty())
        {
            ++line_no;
            const auto eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("", line_no, "syntax error: expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError("", line_no, "syntax error: missing key");

            const KeySpec *spec = find_key(key);
            if (!spec)
                throw ConfigError(key, line_no, "unknown key");
            if (seen.contains(key))
                throw ConfigError(key, line_no, "duplicate key (first set on line " + std::to_string(seen[key]) + ")");
            if (value.empty())
                throw ConfigError(key, line_no, "missing value");
            seen[key] = line_no;

            try
            {
                spec->read(config, value);
            }
            catch (const BadValue &bad)
            {
                throw ConfigError(key, line_no, bad.message);
            }
        }

        try
        {
            config.validate();
        }
        catch (const ConfigError &e)
        {
            const auto it = seen.find(e.key());
            if (it == seen.end())
                throw;
            // Strip the key prefix added by the line-less error and rebuild with the line
            const std::string prefix = "key '" + e.key() + "': ";
            std::string message = e.what();
            if (message.rfind(prefix, 0) == 0)
                message = message.substr(prefix.size());
            throw ConfigError(e.key(), it->second, message);
        }
        return config;
    }

    std::string serialize_config(const RunConfig &config)
    {
        std::ostringstream out;
        for (const auto &k : key_table())
            if (auto value = k.write(config))
                out << k.name << " = " << *value << '\n';
        return out.str();
    }
}
