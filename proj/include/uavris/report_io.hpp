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

#ifndef UAVRIS_REPORT_IO_HPP
#define UAVRIS_REPORT_IO_HPP

#include "uavris/experiments.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace uavris
{
    inline constexpr const char *kCdfHeader = "rate_bps_hz,cum_fraction";
    inline constexpr const char *kLinkHeader =
        "x_m,y_m,z_m,p_los_bu,p_los_ru,r1,r2,r3,r_avg_ris,r_avg_free,throughput_ris_mbps,throughput_free_mbps";

    void write_cdf_csv(std::ostream &out, const std::vector<CdfPoint> &cdf);

    // One row per cell, row-major; the same schema serves single-link runs
    void write_link_csv(std::ostream &out, const std::vector<HeatmapCell> &cells);

    // Minimal reader for the two schemas above; throws std::runtime_error naming the column at fault
    struct CsvTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<double>> rows;

        std::size_t column(const std::string &name) const;
    };
    CsvTable read_csv(std::istream &in, const std::string &expected_header);
}

#endif
