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

#include "uavris/run.hpp"

#include "uavris/report_io.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

namespace uavris
{
    namespace
    {
        namespace fs = std::filesystem;

        void write_file(const fs::path &path, const std::function<void(std::ostream &)> &body)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open '" + path.string() + "' for writing");
            body(out);
            out.flush();
            if (!out)
                throw IoError("write failed for '" + path.string() + "'");
        }
    }

    RunOutcome run(const RunConfig &config, const std::filesystem::path &out_dir)
    {
        config.validate();
        const auto start = std::chrono::steady_clock::now();

        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec)
            throw IoError("cannot create output directory '" + out_dir.string() + "': " + ec.message());

        RunOutcome outcome;
        switch (config.experiment)
        {
        case ExperimentKind::Cdf:
        {
            const bool primary_ris = config.ris != RisMode::Off;
            const CdfResult primary = run_cdf(config.cdf_spec(primary_ris), config.threads);
            outcome.files.push_back(out_dir / "cdf.csv");
            write_file(outcome.files.back(), [&](std::ostream &o) { write_cdf_csv(o, primary.cdf); });
            if (config.ris == RisMode::Both)
            {
                const CdfResult free = run_cdf(config.cdf_spec(false), config.threads);
                outcome.files.push_back(out_dir / "cdf_free.csv");
                write_file(outcome.files.back(), [&](std::ostream &o) { write_cdf_csv(o, free.cdf); });
            }
            break;
        }
        case ExperimentKind::Heatmap:
        {
            const HeatmapResult map = run_heatmap(config.heatmap_spec(), config.threads);
            outcome.files.push_back(out_dir / "heatmap.csv");
            write_file(outcome.files.back(), [&](std::ostream &o) { write_link_csv(o, map.cells); });
            break;
        }
        case ExperimentKind::Single:
        {
            const HeatmapCell cell{evaluate_link(config.scenario(true), config.uav_position),
                                   evaluate_link(config.scenario(false), config.uav_position)};
            outcome.files.push_back(out_dir / "single.csv");
            write_file(outcome.files.back(), [&](std::ostream &o) { write_link_csv(o, {cell}); });
            break;
        }
        }

        outcome.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const fs::path manifest = out_dir / "manifest.txt";
        write_file(manifest, [&](std::ostream &o) {
            o << "tool = uavris\n";
            o << "version = " << UAVRIS_VERSION << '\n';
            o << "experiment = " << to_string(config.experiment) << '\n';
            o << "seed = " << config.seed << '\n';
            o << "environment = " << config.resolved_environment().name << '\n';
            o << "ris = " << to_string(config.ris) << '\n';
            o << "wall_time_s = " << format_double(outcome.wall_time_s) << '\n';
            o << "outputs = ";
            for (std::size_t i = 0; i < outcome.files.size(); ++i)
                o << (i ? ", " : "") << outcome.files[i].filename().string();
            o << '\n';
            std::istringstream echo(serialize_config(config));
            for (std::string line; std::getline(echo, line);)
                o << "config." << line << '\n';
        });
        outcome.files.push_back(manifest);
        return outcome;
    }
}
