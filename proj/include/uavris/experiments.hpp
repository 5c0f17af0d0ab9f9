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

#ifndef UAVRIS_EXPERIMENTS_HPP
#define UAVRIS_EXPERIMENTS_HPP

#include "uavris/linkrate.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace uavris
{
    struct Interval
    {
        double lo = 0.0;
        double hi = 0.0;
        friend bool operator==(const Interval &, const Interval &) = default;
    };

    // Evenly spaced samples min, min + step, ... up to and including max (within rounding)
    struct GridAxis
    {
        double min = 0.0;
        double max = 0.0;
        double step = 1.0;

        std::vector<double> values() const;
        friend bool operator==(const GridAxis &, const GridAxis &) = default;
    };

    struct CdfExperimentSpec
    {
        Scenario scenario;
        std::size_t num_samples = 10000;
        Interval x_range{100.0, 1000.0};
        Interval y_range{100.0, 1000.0};
        double z_fixed = 100.0;
        std::uint64_t seed = 1;

        void validate() const;
    };

    struct HeatmapExperimentSpec
    {
        Scenario scenario;
        GridAxis x{100.0, 1000.0, 25.0};
        GridAxis y{100.0, 1000.0, 25.0};
        double z_fixed = 100.0;

        void validate() const;
    };

    struct CdfPoint
    {
        double value = 0.0;
        double fraction = 0.0;
    };

    struct CdfResult
    {
        std::vector<LinkReport> reports; // in draw order
        std::vector<CdfPoint> cdf;       // of reports[i].r_avg
    };

    struct HeatmapCell
    {
        LinkReport ris;  // RIS enabled
        LinkReport free; // direct link only

        double throughput_ris_mbps() const { return ris.throughput / 1.0e6; }
        double throughput_free_mbps() const { return free.throughput / 1.0e6; }
    };

    // Row-major: cell (iy, ix) at index iy * xs.size() + ix
    struct HeatmapResult
    {
        std::vector<double> xs;
        std::vector<double> ys;
        double z = 0.0;
        std::vector<HeatmapCell> cells;

        const HeatmapCell &at(std::size_t iy, std::size_t ix) const { return cells[iy * xs.size() + ix]; }
    };

    // Counter-based generator: draw i of stream `seed` depends only on (seed, i),
    // so samples can be produced in any order or thread.
    class SplitMix64
    {
    public:
        explicit SplitMix64(std::uint64_t state) : state_(state) {}

        std::uint64_t next();
        // Uniform in [0, 1) with 53 random bits
        double uniform();

        static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

    private:
        std::uint64_t state_;
    };

    // Sorted (value, rank / n) pairs. Throws InvalidParameter on empty input.
    std::vector<CdfPoint> empirical_cdf(std::span<const double> samples);

    // Value below which `fraction` of the CDF mass lies (smallest value with cum_fraction >= fraction)
    double cdf_quantile(std::span<const CdfPoint> cdf, double fraction);

    // Draw positions i = 0..n-1 uniformly in the rectangle at z_fixed, evaluate each.
    // `threads` = 0 uses the hardware concurrency.
    CdfResult run_cdf(const CdfExperimentSpec &spec, unsigned threads = 0);

    HeatmapResult run_heatmap(const HeatmapExperimentSpec &spec, unsigned threads = 0);

    // Smallest ground distance from `center` among cells whose average rate falls below
    // `threshold`; +inf when every cell meets it.
    double coverage_radius(const HeatmapResult &map, const Position3D &center, double threshold, bool ris);

    // Runs body(i) for i in [0, n) on up to `threads` workers; rethrows the first failure
    void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &body);
}

#endif
