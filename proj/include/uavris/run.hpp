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

#ifndef UAVRIS_RUN_HPP
#define UAVRIS_RUN_HPP

#include "uavris/config.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavris
{
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct RunOutcome
    {
        std::vector<std::filesystem::path> files; // CSV outputs followed by the manifest
        double wall_time_s = 0.0;
    };

    // Executes the configured experiment and writes into `out_dir` (created if missing):
    //   cdf      -> cdf.csv (RIS on, or RIS-free with ris = off), plus cdf_free.csv with ris = both
    //   heatmap  -> heatmap.csv
    //   single   -> single.csv
    // and manifest.txt: "key = value" lines with tool, version, experiment, seed, wall time,
    // output files and the full configuration echoed under "config." keys.
    RunOutcome run(const RunConfig &config, const std::filesystem::path &out_dir);
}

#endif
