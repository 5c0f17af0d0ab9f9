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

#include "uavris/experiments.hpp"

#include "uavris/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace uavris
{
    std::vector<double> GridAxis::values() const
    {
        require(step > 0.0 && std::isfinite(step), "grid step must be positive");
        require(max >= min && std::isfinite(min) && std::isfinite(max), "grid bounds must satisfy min <= max");
        const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
        std::vector<double> v(count);
        for (std::size_t i = 0; i < count; ++i)
            v[i] = min + static_cast<double>(i) * step;
        return v;
    }

    void CdfExperimentSpec::validate() const
    {
        scenario.validate();
        require(num_samples >= 1, "CDF experiment needs at least one sample");
        require(x_range.hi > x_range.lo && y_range.hi > y_range.lo, "sampling ranges must be non-degenerate");
        require(z_fixed > 0.0, "UAV altitude must be positive");
    }

    void HeatmapExperimentSpec::validate() const
    {
        scenario.validate();
        x.values();
        y.values();
        require(z_fixed > 0.0, "UAV altitude must be positive");
    }

    std::uint64_t SplitMix64::next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double SplitMix64::uniform()
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index)
    {
        // Scramble the seed, then offset by the index so streams never share states
        SplitMix64 mixer(seed);
        return SplitMix64(mixer.next() ^ (index * 0xD1B54A32D192ED03ULL));
    }

    std::vector<CdfPoint> empirical_cdf(std::span<const double> samples)
    {
        if (samples.empty())
            throw InvalidParameter("empirical_cdf: no samples");
        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());
        const double n = static_cast<double>(sorted.size());
        std::vector<CdfPoint> cdf(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            cdf[i] = {sorted[i], static_cast<double>(i + 1) / n};
        return cdf;
    }

    double cdf_quantile(std::span<const CdfPoint> cdf, double fraction)
    {
        require(!cdf.empty(), "cdf_quantile: empty CDF");
        auto it = std::lower_bound(cdf.begin(), cdf.end(), fraction - 1e-12,
                                   [](const CdfPoint &p, double f) { return p.fraction < f; });
        if (it == cdf.end())
            --it;
        return it->value;
    }

    void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &body)
    {
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
        if (threads <= 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    body(i);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = n;
                    return;
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(worker);
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    CdfResult run_cdf(const CdfExperimentSpec &spec, unsigned threads)
    {
        spec.validate();
        CdfResult result;
        result.reports.resize(spec.num_samples);
        parallel_for(spec.num_samples, threads, [&](std::size_t i) {
            SplitMix64 rng = SplitMix64::stream(spec.seed, i);
            const double x = spec.x_range.lo + (spec.x_range.hi - spec.x_range.lo) * rng.uniform();
            const double y = spec.y_range.lo + (spec.y_range.hi - spec.y_range.lo) * rng.uniform();
            result.reports[i] = evaluate_link(spec.scenario, {x, y, spec.z_fixed});
        });

        std::vector<double> rates(spec.num_samples);
        std::transform(result.reports.begin(), result.reports.end(), rates.begin(),
                       [](const LinkReport &r) { return r.r_avg; });
        result.cdf = empirical_cdf(rates);
        return result;
    }

    HeatmapResult run_heatmap(const HeatmapExperimentSpec &spec, unsigned threads)
    {
        spec.validate();
        HeatmapResult map;
        map.xs = spec.x.values();
        map.ys = spec.y.values();
        map.z = spec.z_fixed;
        map.cells.resize(map.xs.size() * map.ys.size());

        Scenario with_ris = spec.scenario;
        with_ris.ris_enabled = true;
        Scenario without_ris = spec.scenario;
        without_ris.ris_enabled = false;

        parallel_for(map.cells.size(), threads, [&](std::size_t i) {
            const Position3D uav{map.xs[i % map.xs.size()], map.ys[i / map.xs.size()], spec.z_fixed};
            map.cells[i] = {evaluate_link(with_ris, uav), evaluate_link(without_ris, uav)};
        });
        return map;
    }

    double coverage_radius(const HeatmapResult &map, const Position3D &center, double threshold, bool ris)
    {
        double radius = std::numeric_limits<double>::infinity();
        for (const auto &cell : map.cells)
        {
            const LinkReport &r = ris ? cell.ris : cell.free;
            if (r.r_avg < threshold)
                radius = std::min(radius, std::hypot(r.uav_position.x - center.x, r.uav_position.y - center.y));
        }
        return radius;
    }
}
