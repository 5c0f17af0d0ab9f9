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

#include "oracles.hpp"
#include "uavris/errors.hpp"
#include "uavris/los.hpp"

#include <doctest.h>

#include <random>

using namespace uavris;
using doctest::Approx;

TEST_SUITE("los")
{
    TEST_CASE("presets")
    {
        const auto s = environments::suburban();
        CHECK(s.alpha == 0.1);
        CHECK(s.kappa == 750.0);
        CHECK(s.gamma == 8.0);
        CHECK(environments::urban() == Environment{0.3, 500.0, 15.0, "urban"});
        CHECK(environments::dense_urban() == Environment{0.5, 300.0, 20.0, "dense-urban"});
        CHECK(environments::highrise_urban() == Environment{0.5, 300.0, 50.0, "highrise-urban"});
        CHECK(environments::by_name("Dense_Urban")->name == "dense-urban");
        CHECK(environments::by_name("highrise urban").has_value());
        CHECK_FALSE(environments::by_name("rural").has_value());
    }

    TEST_CASE("building count")
    {
        CHECK(building_count(1.0, environments::urban()) == 11);
        CHECK(building_count(0.5, environments::suburban()) == 3);
        CHECK(building_count(0.05, environments::suburban()) == -1);
        CHECK(building_count(0.0, environments::urban()) == -1);
        CHECK_THROWS_AS(building_count(-0.1, environments::urban()), InvalidParameter);
    }

    TEST_CASE("empty product is exactly one")
    {
        CHECK(los_probability(10.0, 100.0, 0.05, environments::suburban()) == 1.0);
        CHECK(los_probability(0.0, 0.0, 0.0, environments::highrise_urban()) == 1.0);
    }

    TEST_CASE("ground-level link through buildings is blocked")
    {
        CHECK(los_probability(0.0, 0.0, 1.0, environments::urban()) == 0.0);
    }

    TEST_CASE("urban 1 km reference value")
    {
        const double want = oracle::los_reference(100.0, 10.0, 1.0, 0.3, 500.0, 15.0);
        CHECK(want == Approx(0.16976998370751126).epsilon(1e-14));
        CHECK(std::abs(los_probability(100.0, 10.0, 1.0, environments::urban()) - want) < 1e-12);
    }

    TEST_CASE("property: matches straight-line reference and stays in [0, 1]")
    {
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> h(0.0, 300.0), r(0.0, 3.0), a(0.0, 1.0), k(1.0, 1000.0),
            g(1.0, 60.0);
        for (int i = 0; i < 5000; ++i)
        {
            const Environment env{a(rng), k(rng), g(rng), "random"};
            const double ht = h(rng), hr = h(rng), rk = r(rng);
            const double p = los_probability(ht, hr, rk, env);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(std::abs(p - oracle::los_reference(ht, hr, rk, env.alpha, env.kappa, env.gamma)) < 1e-12);
        }
    }

    TEST_CASE("property: non-decreasing in altitude, non-increasing in gamma")
    {
        std::mt19937_64 rng(37);
        std::uniform_real_distribution<double> h(0.0, 200.0), r(0.0, 3.0), a(0.0, 1.0), k(1.0, 1000.0),
            g(1.0, 60.0), dh(0.0, 50.0);
        for (int i = 0; i < 1000; ++i)
        {
            const Environment env{a(rng), k(rng), g(rng), "random"};
            const double ht = h(rng), hr = h(rng), rk = r(rng);
            const double p = los_probability(ht, hr, rk, env);
            CHECK(los_probability(ht + dh(rng), hr, rk, env) >= p);

            Environment taller = env;
            taller.gamma += dh(rng);
            CHECK(los_probability(ht, hr, rk, taller) <= p);
        }
    }

    TEST_CASE("invalid inputs")
    {
        CHECK_THROWS_AS(los_probability(-1.0, 10.0, 0.5, environments::urban()), InvalidParameter);
        CHECK_THROWS_AS(los_probability(1.0, 10.0, -0.5, environments::urban()), InvalidParameter);
        CHECK_THROWS_AS(los_probability(1.0, 10.0, 0.5, Environment{1.5, 500, 15, "bad"}), InvalidParameter);
        CHECK_THROWS_AS(los_probability(1.0, 10.0, 0.5, Environment{0.5, 0, 15, "bad"}), InvalidParameter);
    }
}
