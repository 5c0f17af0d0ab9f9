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

#include "uavris/report_io.hpp"

#include "uavris/config.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace uavris
{
    namespace
    {
        std::vector<std::string> split_csv_line(const std::string &line)
        {
            std::vector<std::string> fields;
            std::string field;
            std::istringstream ss(line);
            while (std::getline(ss, field, ','))
                fields.push_back(field);
            if (!line.empty() && line.back() == ',')
                fields.emplace_back();
            return fields;
        }
    }

    void write_cdf_csv(std::ostream &out, const std::vector<CdfPoint> &cdf)
    {
        out << kCdfHeader << '\n';
        for (const auto &p : cdf)
            out << format_double(p.value) << ',' << format_double(p.fraction) << '\n';
    }

    void write_link_csv(std::ostream &out, const std::vector<HeatmapCell> &cells)
    {
        out << kLinkHeader << '\n';
        for (const auto &c : cells)
        {
            const LinkReport &r = c.ris;
            out << format_double(r.uav_position.x) << ',' << format_double(r.uav_position.y) << ','
                << format_double(r.uav_position.z) << ',' << format_double(r.p_los_bu) << ','
                << format_double(r.p_los_ru) << ',' << format_double(r.r1) << ',' << format_double(r.r2) << ','
                << format_double(r.r3) << ',' << format_double(r.r_avg) << ',' << format_double(c.free.r_avg) << ','
                << format_double(c.throughput_ris_mbps()) << ',' << format_double(c.throughput_free_mbps()) << '\n';
        }
    }

    std::size_t CsvTable::column(const std::string &name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name)
                return i;
        throw std::runtime_error("missing column '" + name + "'");
    }

    CsvTable read_csv(std::istream &in, const std::string &expected_header)
    {
        CsvTable table;
        std::string line;
        if (!std::getline(in, line))
            throw std::runtime_error("empty CSV: no header");
        table.header = split_csv_line(line);
        const auto expected = split_csv_line(expected_header);
        for (std::size_t i = 0; i < expected.size(); ++i)
        {
            if (i >= table.header.size())
                throw std::runtime_error("missing column '" + expected[i] + "'");
            if (table.header[i] != expected[i])
                throw std::runtime_error("column " + std::to_string(i + 1) + ": expected '" + expected[i] +
                                         "', found '" + table.header[i] + "'");
        }
        if (table.header.size() != expected.size())
            throw std::runtime_error("unexpected column '" + table.header[expected.size()] + "'");

        int row_no = 1;
        while (std::getline(in, line))
        {
            ++row_no;
            if (line.empty())
                continue;
            const auto fields = split_csv_line(line);
            if (fields.size() != table.header.size())
                throw std::runtime_error("row " + std::to_string(row_no) + ": expected " +
                                         std::to_string(table.header.size()) + " fields");
            std::vector<double> row(fields.size());
            for (std::size_t i = 0; i < fields.size(); ++i)
            {
                const auto &f = fields[i];
                const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), row[i]);
                if (ec != std::errc() || ptr != f.data() + f.size())
                    throw std::runtime_error("row " + std::to_string(row_no) + ", column '" + table.header[i] +
                                             "': not a number");
            }
            table.rows.push_back(std::move(row));
        }
        return table;
    }
}
