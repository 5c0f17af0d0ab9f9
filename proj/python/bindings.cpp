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

// Python module uavris._core

#include "uavris/config.hpp"
#include "uavris/errors.hpp"
#include "uavris/experiments.hpp"
#include "uavris/linkrate.hpp"
#include "uavris/los.hpp"
#include "uavris/run.hpp"

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace uavris;

namespace
{
    py::dict report_dict(const LinkReport &r)
    {
        py::dict d;
        d["x_m"] = r.uav_position.x;
        d["y_m"] = r.uav_position.y;
        d["z_m"] = r.uav_position.z;
        d["p_los_bu"] = r.p_los_bu;
        d["p_los_ru"] = r.p_los_ru;
        d["r1"] = r.r1;
        d["r2"] = r.r2;
        d["r3"] = r.r3;
        d["r_avg"] = r.r_avg;
        d["throughput"] = r.throughput;
        return d;
    }

    py::array_t<double> to_array(const std::vector<double> &v)
    {
        py::array_t<double> a(static_cast<py::ssize_t>(v.size()));
        auto w = a.mutable_unchecked<1>();
        for (std::size_t i = 0; i < v.size(); ++i)
            w(static_cast<py::ssize_t>(i)) = v[i];
        return a;
    }

    // numpy grid of one LinkReport field, shape (len(ys), len(xs))
    py::array_t<double> grid(const HeatmapResult &m, bool ris)
    {
        py::array_t<double> a({m.ys.size(), m.xs.size()});
        auto v = a.mutable_unchecked<2>();
        for (std::size_t iy = 0; iy < m.ys.size(); ++iy)
            for (std::size_t ix = 0; ix < m.xs.size(); ++ix)
            {
                const auto &c = m.at(iy, ix);
                v(iy, ix) = ris ? c.ris.r_avg : c.free.r_avg;
            }
        return a;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "RIS-assisted 3D connectivity simulator for UAV links";
    m.attr("__version__") = UAVRIS_VERSION;

    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<Position3D>(m, "Position3D")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Position3D::x)
        .def_readwrite("y", &Position3D::y)
        .def_readwrite("z", &Position3D::z)
        .def(py::self == py::self)
        .def("__repr__", [](const Position3D &p) {
            return "Position3D(" + format_double(p.x) + ", " + format_double(p.y) + ", " + format_double(p.z) + ")";
        });

    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def_readonly("distance", &LinkGeometry::distance)
        .def_readonly("ground_distance", &LinkGeometry::ground_distance)
        .def_readonly("azimuth", &LinkGeometry::azimuth)
        .def_readonly("elevation", &LinkGeometry::elevation);
    m.def("link_geometry", &link_geometry, py::arg("tx"), py::arg("rx"));

    m.def("wavelength_of", &wavelength_of, py::arg("carrier_hz"));
    m.def(
        "free_space_path_loss", [](double d, double f) { return free_space_path_loss(d, f).value; },
        py::arg("distance_m"), py::arg("carrier_hz"));
    m.def(
        "upa_response",
        [](int nx, int ny, double azimuth, double elevation, double wavelength, double spacing) {
            if (spacing <= 0.0)
                spacing = wavelength / 2.0;
            return Eigen::VectorXcd(upa_response({nx, ny, spacing, spacing}, azimuth, elevation, wavelength).entries());
        },
        py::arg("num_x"), py::arg("num_y"), py::arg("azimuth"), py::arg("elevation"), py::arg("wavelength"),
        py::arg("spacing") = 0.0);
    m.def(
        "ula_response",
        [](int n, double elevation, double wavelength, double tilt, double spacing) {
            if (spacing <= 0.0)
                spacing = wavelength / 2.0;
            return Eigen::VectorXcd(ula_response({n, spacing, tilt}, elevation, wavelength).entries());
        },
        py::arg("num_elements"), py::arg("elevation"), py::arg("wavelength"), py::arg("tilt") = 0.0,
        py::arg("spacing") = 0.0);

    py::class_<Environment>(m, "Environment")
        .def(py::init<double, double, double, std::string>(), py::arg("alpha"), py::arg("kappa"), py::arg("gamma"),
             py::arg("name") = "custom")
        .def_readwrite("alpha", &Environment::alpha)
        .def_readwrite("kappa", &Environment::kappa)
        .def_readwrite("gamma", &Environment::gamma)
        .def_readwrite("name", &Environment::name);
    m.def("environments", &environments::all);
    m.def(
        "environment",
        [](const std::string &name) {
            const auto env = environments::by_name(name);
            if (!env)
                throw InvalidParameter("unknown environment '" + name + "'");
            return *env;
        },
        py::arg("name"));
    m.def("building_count", &building_count, py::arg("ground_distance_km"), py::arg("env"));
    m.def("los_probability", &los_probability, py::arg("h_tx"), py::arg("h_rx"), py::arg("ground_distance_km"),
          py::arg("env"));

    auto budget = [](double snr, double g_bu, double g_ru, double g_br) {
        return LinkBudget{snr, 1.0, g_bu, g_ru, g_br};
    };
    m.def(
        "rate_case1", [=](double snr, double g_bu, double g_ru, double g_br) { return rate_case1(budget(snr, g_bu, g_ru, g_br)); },
        py::arg("snr"), py::arg("gain_bu"), py::arg("gain_ru"), py::arg("gain_br"));
    m.def(
        "rate_case2", [=](double snr, double g_bu) { return rate_case2(budget(snr, g_bu, 0.0, 0.0)); }, py::arg("snr"),
        py::arg("gain_bu"));
    m.def(
        "rate_case3", [=](double snr, double g_ru, double g_br) { return rate_case3(budget(snr, 0.0, g_ru, g_br)); },
        py::arg("snr"), py::arg("gain_ru"), py::arg("gain_br"));

    py::class_<Scenario>(m, "Scenario")
        .def_static("defaults", &Scenario::defaults, py::arg("carrier_hz") = 28.0e9)
        .def_readwrite("bs_position", &Scenario::bs_position)
        .def_readwrite("ris_position", &Scenario::ris_position)
        .def_readwrite("carrier_hz", &Scenario::carrier_hz)
        .def_readwrite("bandwidth_hz", &Scenario::bandwidth_hz)
        .def_readwrite("environment", &Scenario::environment)
        .def_readwrite("tx_power", &Scenario::tx_power)
        .def_readwrite("noise_power", &Scenario::noise_power)
        .def_readwrite("ris_enabled", &Scenario::ris_enabled);

    py::class_<LinkReport>(m, "LinkReport")
        .def_readonly("uav_position", &LinkReport::uav_position)
        .def_readonly("p_los_bu", &LinkReport::p_los_bu)
        .def_readonly("p_los_ru", &LinkReport::p_los_ru)
        .def_readonly("r1", &LinkReport::r1)
        .def_readonly("r2", &LinkReport::r2)
        .def_readonly("r3", &LinkReport::r3)
        .def_readonly("r_avg", &LinkReport::r_avg)
        .def_readonly("throughput", &LinkReport::throughput)
        .def_readonly("degenerate_flag", &LinkReport::degenerate_flag)
        .def_readonly("dominance_flag", &LinkReport::dominance_flag)
        .def("as_dict", &report_dict);
    m.def("evaluate_link", &evaluate_link, py::arg("scenario"), py::arg("uav_position"));

    py::class_<ExactRates>(m, "ExactRates")
        .def_readonly("r1", &ExactRates::r1)
        .def_readonly("r2", &ExactRates::r2)
        .def_readonly("r3", &ExactRates::r3)
        .def_readonly("coherence", &ExactRates::coherence);
    m.def("exact_link_rates", &exact_link_rates, py::arg("scenario"), py::arg("uav_position"));

    m.def(
        "empirical_cdf",
        [](const std::vector<double> &xs) {
            const auto cdf = empirical_cdf(xs);
            py::array_t<double> a({cdf.size(), std::size_t{2}});
            auto v = a.mutable_unchecked<2>();
            for (std::size_t i = 0; i < cdf.size(); ++i)
            {
                v(i, 0) = cdf[i].value;
                v(i, 1) = cdf[i].fraction;
            }
            return a;
        },
        py::arg("samples"), "Sorted (value, cumulative fraction) rows");

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("threads", &RunConfig::threads)
        .def_readwrite("carrier_hz", &RunConfig::carrier_hz)
        .def_readwrite("environment", &RunConfig::environment)
        .def_readwrite("samples", &RunConfig::samples)
        .def_readwrite("grid_step_m", &RunConfig::grid_step_m)
        .def_readwrite("z_m", &RunConfig::z_m)
        .def_readwrite("output_dir", &RunConfig::output_dir)
        .def_property_readonly("experiment", [](const RunConfig &c) { return to_string(c.experiment); })
        .def_property_readonly("ris", [](const RunConfig &c) { return to_string(c.ris); })
        .def("scenario", &RunConfig::scenario, py::arg("ris_enabled") = true)
        .def("validate", &RunConfig::validate)
        .def(py::self == py::self);
    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("serialize_config", &serialize_config, py::arg("config"));

    m.def(
        "run_cdf",
        [](const RunConfig &c, bool ris_enabled) {
            CdfResult res;
            {
                py::gil_scoped_release release;
                res = run_cdf(c.cdf_spec(ris_enabled), c.threads);
            }
            py::list reports;
            for (const auto &r : res.reports)
                reports.append(r);
            std::vector<double> values, fractions;
            for (const auto &p : res.cdf)
            {
                values.push_back(p.value);
                fractions.push_back(p.fraction);
            }
            py::dict out;
            out["reports"] = reports;
            out["rate"] = to_array(values);
            out["cum_fraction"] = to_array(fractions);
            return out;
        },
        py::arg("config"), py::arg("ris_enabled") = true);
    m.def(
        "run_heatmap",
        [](const RunConfig &c) {
            HeatmapResult res;
            {
                py::gil_scoped_release release;
                res = run_heatmap(c.heatmap_spec(), c.threads);
            }
            py::dict out;
            out["x"] = to_array(res.xs);
            out["y"] = to_array(res.ys);
            out["z"] = res.z;
            out["r_avg_ris"] = grid(res, true);
            out["r_avg_free"] = grid(res, false);
            return out;
        },
        py::arg("config"), "Rate grids of shape (len(y), len(x))");
    m.def(
        "run",
        [](const RunConfig &c, const std::filesystem::path &out_dir) {
            RunOutcome o;
            {
                py::gil_scoped_release release;
                o = run(c, out_dir);
            }
            return o.files;
        },
        py::arg("config"), py::arg("out_dir"), "Runs the configured experiment; returns the written files");
}
