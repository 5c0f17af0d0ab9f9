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

#include "uavris/errors.hpp"
#include "uavris/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace uavris;
using doctest::Approx;

TEST_SUITE("geometry")
{
    TEST_CASE("BS to RIS link from the default deployment")
    {
        const auto g = link_geometry({0, 0, 10}, {0.5, 0.5, 9.5});
        CHECK(g.distance == Approx(0.8660254037844386).epsilon(1e-14));
        CHECK(g.ground_distance == Approx(std::sqrt(0.5)).epsilon(1e-14));
        CHECK(g.azimuth == Approx(std::numbers::pi / 4).epsilon(1e-14));
        CHECK(g.elevation == Approx(-0.61547970867038748).epsilon(1e-14));
    }

    TEST_CASE("vertical link has zero azimuth")
    {
        const auto g = link_geometry({0, 0, 0}, {0, 0, 1});
        CHECK(g.ground_distance == 0.0);
        CHECK(g.azimuth == 0.0);
        CHECK(g.elevation == Approx(std::numbers::pi / 2));

        const auto down = link_geometry({0, 0, 1}, {0, 0, 0});
        CHECK(down.elevation == Approx(-std::numbers::pi / 2));
    }

    TEST_CASE("3-4-5 triangle")
    {
        const auto g = link_geometry({0, 0, 0}, {3, 4, 0});
        CHECK(g.distance == Approx(5.0));
        CHECK(g.elevation == 0.0);
        CHECK(g.azimuth == Approx(std::atan2(4.0, 3.0)));
        CHECK(g.azimuth == Approx(0.9273).epsilon(1e-4));
    }

    TEST_CASE("azimuth stays in (-pi, pi]")
    {
        CHECK(link_geometry({0, 0, 0}, {-1, 0, 0}).azimuth == Approx(std::numbers::pi));
        CHECK(link_geometry({0, 0, 0}, {-1, -0.0, 0}).azimuth == Approx(std::numbers::pi));
        CHECK(link_geometry({0, 0, 0}, {0, -1, 0}).azimuth == Approx(-std::numbers::pi / 2));
    }

    TEST_CASE("coincident positions are degenerate")
    {
        CHECK_THROWS_AS(link_geometry({1, 2, 3}, {1, 2, 3}), DegenerateGeometry);
    }

    TEST_CASE("non-finite coordinates rejected")
    {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(link_geometry({nan, 0, 0}, {1, 0, 0}), InvalidParameter);
        CHECK_THROWS_AS(link_geometry({0, 0, 0}, {0, std::numeric_limits<double>::infinity(), 0}),
                        InvalidParameter);
    }

    TEST_CASE("property: round trip, antisymmetry, translation invariance")
    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> coord(-2000.0, 2000.0);
        std::uniform_real_distribution<double> height(0.0, 300.0);
        for (int i = 0; i < 2000; ++i)
        {
            const Position3D a{coord(rng), coord(rng), height(rng)};
            const Position3D b{coord(rng), coord(rng), height(rng)};
            const Position3D t{coord(rng), coord(rng), height(rng)};
            const auto g = link_geometry(a, b);

            CHECK(g.distance >= g.ground_distance);
            CHECK(g.ground_distance >= 0.0);
            const double dz = b.z - a.z;
            CHECK(std::abs(g.distance * g.distance - (g.ground_distance * g.ground_distance + dz * dz)) <=
                  1e-12 * g.distance * g.distance);
            CHECK(g.elevation == Approx(std::asin(dz / g.distance)).epsilon(1e-9));

            const auto back = project(a, g);
            CHECK(std::abs(back.x - b.x) < 1e-9);
            CHECK(std::abs(back.y - b.y) < 1e-9);
            CHECK(std::abs(back.z - b.z) < 1e-9);

            const auto r = link_geometry(b, a);
            CHECK(r.elevation == Approx(-g.elevation).epsilon(1e-12));
            const double daz = std::remainder(r.azimuth - g.azimuth - std::numbers::pi, 2.0 * std::numbers::pi);
            CHECK(std::abs(daz) < 1e-9);

            const auto moved = link_geometry(a + t, b + t);
            CHECK(moved.distance == Approx(g.distance).epsilon(1e-9));
            CHECK(moved.azimuth == Approx(g.azimuth).epsilon(1e-9));
            CHECK(moved.elevation == Approx(g.elevation).epsilon(1e-9));
        }
    }
}
