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

// Command-line front end: uavris --config run.cfg --experiment cdf --out results/

#include "uavris/config.hpp"
#include "uavris/errors.hpp"
#include "uavris/run.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    constexpr const char *kOutDirEnv = "UAVRIS_OUT_DIR";

    std::string read_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw uavris::IoError("cannot read config '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"RIS-assisted UAV link simulator"};
    app.set_version_flag("--version", UAVRIS_VERSION);

    std::string config_path;
    std::string experiment;
    std::string out_dir;
    std::string ris;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    bool print_config = false;

    app.add_option("--config", config_path, "Configuration file (key = value lines)")->check(CLI::ExistingFile);
    app.add_option("--experiment", experiment, "Experiment to run")
        ->check(CLI::IsMember({"cdf", "heatmap", "single"}));
    app.add_option("--out", out_dir, std::string("Output directory (default: $") + kOutDirEnv + " or ./uavris-out)");
    app.add_option("--seed", seed, "Random seed for the CDF experiment");
    app.add_option("--threads", threads, "Worker threads (0 = all cores)");
    app.add_option("--ris", ris, "RIS configuration")->check(CLI::IsMember({"on", "off", "both"}));
    app.add_flag("--print-config", print_config, "Print the resolved configuration and exit");

    CLI11_PARSE(app, argc, argv);

    try
    {
        uavris::RunConfig config = uavris::parse_config(config_path.empty() ? std::string() : read_file(config_path));
        if (!experiment.empty())
            config.experiment = *uavris::parse_experiment_kind(experiment);
        if (!ris.empty())
            config.ris = *uavris::parse_ris_mode(ris);
        if (seed)
            config.seed = *seed;
        if (threads)
            config.threads = *threads;
        if (!out_dir.empty())
            config.output_dir = out_dir;
        if (config.output_dir.empty())
        {
            const char *env = std::getenv(kOutDirEnv);
            config.output_dir = (env && *env) ? env : "uavris-out";
        }
        config.validate();

        if (print_config)
        {
            std::cout << uavris::serialize_config(config);
            return 0;
        }

        const auto outcome = uavris::run(config, config.output_dir);
        for (const auto &f : outcome.files)
            std::cout << "wrote " << f.string() << '\n';
        return 0;
    }
    catch (const uavris::ConfigError &e)
    {
        std::cerr << "uavris: config error: " << e.what() << '\n';
        return 2;
    }
    catch (const uavris::IoError &e)
    {
        std::cerr << "uavris: I/O error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "uavris: error: " << e.what() << '\n';
        return 1;
    }
}
