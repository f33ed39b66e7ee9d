// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwalk/apparatus.h"
#include "qwalk/coin.h"
#include "qwalk/config.h"
#include "qwalk/error.h"
#include "qwalk/measure.h"
#include "qwalk/oracle.h"
#include "qwalk/runner.h"
#include "qwalk/schedule.h"
#include "qwalk/walk.h"

namespace py = pybind11;

namespace {

py::array_t<std::complex<double>> coin_array(const qwalk::CoinMatrix &c) {
    py::array_t<std::complex<double>> out({2, 2});
    auto v = out.mutable_unchecked<2>();
    v(0, 0) = c.alpha;
    v(0, 1) = c.beta;
    v(1, 0) = c.gamma;
    v(1, 1) = c.delta;
    return out;
}

py::array_t<std::complex<double>> state_amplitudes(const qwalk::WalkerState &s) {
    const py::ssize_t sites = s.site_count();
    py::array_t<std::complex<double>> out({py::ssize_t{2}, sites});
    auto v = out.mutable_unchecked<2>();
    for (int c = 0; c < 2; ++c) {
        auto row = s.coin_row(c);
        for (py::ssize_t i = 0; i < sites; ++i) {
            v(c, i) = row[i];
        }
    }
    return out;
}

py::dict report_dict(const qwalk::RunReport &report) {
    py::dict d;
    d["files"] = report.files_written;
    d["violations"] = report.violations;
    d["max_norm_drift"] = report.main.max_norm_drift;
    d["oracle_deviation"] = report.main.oracle_deviation;
    d["similarity"] = report.similarity;
    d["variances"] = qwalk::variance_series(report.main.mean);
    d["mean"] = report.main.mean;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qwalk, m) {
    m.doc() = "Discrete-time quantum walks on beam-splitter meshes";
    m.attr("__version__") = std::string(qwalk::kVersion);

    py::register_exception<qwalk::ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<qwalk::ScheduleError>(m, "ScheduleError", PyExc_ValueError);
    py::register_exception<qwalk::CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<qwalk::ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<qwalk::DegenerateMeasurementError>(m, "DegenerateMeasurementError", PyExc_ValueError);
    py::register_exception<qwalk::ReachabilityError>(m, "ReachabilityError", PyExc_ValueError);
    py::register_exception<qwalk::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<qwalk::IoError>(m, "IoError", PyExc_OSError);

    m.def(
        "build_coin",
        [](double reflectivity, double theta0, double theta1) {
            return coin_array(qwalk::build_coin({reflectivity, theta0, theta1}));
        },
        py::arg("reflectivity"), py::arg("theta0") = 0.0, py::arg("theta1") = 0.0,
        "2x2 complex coin (alpha, beta; gamma, delta) of a beam splitter with the given reflectivity.");

    py::class_<qwalk::WalkerState>(m, "WalkerState")
        .def(py::init<int, int>(), py::arg("num_steps"), py::arg("step_index") = 0)
        .def_static("localized", &qwalk::WalkerState::localized, py::arg("num_steps"), py::arg("coin"),
                    py::arg("site") = 0)
        .def_property_readonly("step_index", &qwalk::WalkerState::step_index)
        .def_property_readonly("num_steps", &qwalk::WalkerState::num_steps)
        .def("amplitude", &qwalk::WalkerState::amplitude, py::arg("coin"), py::arg("site"))
        .def("set_amplitude", &qwalk::WalkerState::set_amplitude, py::arg("coin"), py::arg("site"), py::arg("value"))
        .def("amplitudes", &state_amplitudes, "Array of shape (2, 2N+1); column 0 is site -N.")
        .def("norm_squared", &qwalk::WalkerState::norm_squared);

    py::enum_<qwalk::DisorderKind>(m, "DisorderKind")
        .value("BINARY", qwalk::DisorderKind::kBinary)
        .value("UNIFORM", qwalk::DisorderKind::kUniform);

    py::class_<qwalk::DisorderSpec>(m, "DisorderSpec")
        .def(py::init([](qwalk::DisorderKind kind, std::uint64_t seed, int count) {
                 return qwalk::DisorderSpec{kind, seed, count};
             }),
             py::arg("kind") = qwalk::DisorderKind::kBinary, py::arg("seed") = 0, py::arg("realization_count") = 1)
        .def_readwrite("kind", &qwalk::DisorderSpec::kind)
        .def_readwrite("seed", &qwalk::DisorderSpec::seed)
        .def_readwrite("realization_count", &qwalk::DisorderSpec::realization_count);

    py::class_<qwalk::PhaseSchedule>(m, "PhaseSchedule")
        .def(py::init<int>(), py::arg("num_steps"))
        .def_property_readonly("num_steps", &qwalk::PhaseSchedule::num_steps)
        .def("__len__", &qwalk::PhaseSchedule::size)
        .def("theta", &qwalk::PhaseSchedule::theta, py::arg("step"), py::arg("site"))
        .def("set_theta", &qwalk::PhaseSchedule::set_theta, py::arg("step"), py::arg("site"), py::arg("theta"))
        .def(
            "row",
            [](const qwalk::PhaseSchedule &s, int step) {
                auto r = s.row(step);
                return std::vector<double>(r.begin(), r.end());
            },
            py::arg("step"))
        .def(py::self == py::self);

    m.def("ordered_schedule", &qwalk::ordered_schedule, py::arg("num_steps"), py::arg("theta") = 0.0);
    m.def("disordered_schedule", &qwalk::disordered_schedule, py::arg("num_steps"), py::arg("spec"),
          py::arg("realization_index"));
    m.def("ensemble_schedules", &qwalk::ensemble_schedules, py::arg("num_steps"), py::arg("spec"));

    m.def(
        "evolve",
        [](const qwalk::WalkerState &initial, const qwalk::PhaseSchedule &schedule, double reflectivity,
           int steps) { return qwalk::evolve(initial, schedule, reflectivity, steps); },
        py::arg("initial"), py::arg("schedule"), py::arg("reflectivity"), py::arg("steps"));

    py::class_<qwalk::Distribution>(m, "Distribution")
        .def(py::init([](int step, std::vector<double> p) { return qwalk::Distribution{step, std::move(p)}; }),
             py::arg("step"), py::arg("p"))
        .def_readonly("step", &qwalk::Distribution::step)
        .def_readonly("p", &qwalk::Distribution::p)
        .def("at", &qwalk::Distribution::at, py::arg("site"))
        .def("total", &qwalk::Distribution::total);

    m.def("position_distribution", &qwalk::position_distribution, py::arg("state"));
    m.def(
        "renormalize_measured",
        [](int step, const std::vector<double> &raw) { return qwalk::renormalize_measured(step, raw); },
        py::arg("step"), py::arg("raw"));
    m.def("variance", &qwalk::variance, py::arg("dist"));
    m.def("variance_series", &qwalk::variance_series, py::arg("series"));
    m.def("similarity", &qwalk::similarity, py::arg("a"), py::arg("b"));
    m.def("similarity_partials", &qwalk::similarity_partials, py::arg("a"), py::arg("b"));
    m.def(
        "ensemble_mean_series",
        [](const std::vector<qwalk::DistributionSeries> &runs) { return qwalk::ensemble_mean_series(runs); },
        py::arg("runs"));
    m.def(
        "distribution_series",
        [](const std::vector<qwalk::WalkerState> &trajectory, std::size_t first) {
            return qwalk::distribution_series(trajectory, first);
        },
        py::arg("trajectory"), py::arg("first") = 1);

    py::class_<qwalk::PathRecord>(m, "PathRecord")
        .def_readonly("initial_coin", &qwalk::PathRecord::initial_coin)
        .def_property_readonly("choices", &qwalk::PathRecord::choice_string)
        .def_readonly("final_site", &qwalk::PathRecord::final_site)
        .def_readonly("final_coin", &qwalk::PathRecord::final_coin)
        .def_readonly("amplitude", &qwalk::PathRecord::amplitude)
        .def("moves", &qwalk::PathRecord::moves);

    m.def("enumerate_paths", &qwalk::enumerate_paths, py::arg("initial_coin"), py::arg("schedule"),
          py::arg("reflectivity"), py::arg("steps"));
    m.def("oracle_state", &qwalk::oracle_state, py::arg("initial_coin"), py::arg("schedule"),
          py::arg("reflectivity"), py::arg("steps"));

    m.def(
        "mode_locus",
        [](int step, int site, int coin) {
            auto locus = qwalk::mode_locus(step, site, coin);
            py::dict d;
            d["interferometer"] = std::string(qwalk::to_string(locus.interferometer));
            d["plane"] = locus.plane;
            d["column"] = locus.column;
            d["direction"] = std::string(qwalk::to_string(locus.direction));
            return d;
        },
        py::arg("step"), py::arg("site"), py::arg("coin"));
    m.def("reachable_sites", &qwalk::reachable_sites, py::arg("step"));
    m.def("displacer_passages", &qwalk::displacer_passages, py::arg("path"));

    py::class_<qwalk::RunConfig>(m, "RunConfig")
        .def_property_readonly("steps", [](const qwalk::RunConfig &c) { return c.simulation.steps; })
        .def_property_readonly("reflectivity", [](const qwalk::RunConfig &c) { return c.simulation.reflectivity; })
        .def_readwrite("output_dir", &qwalk::RunConfig::output_dir)
        .def("to_json", &qwalk::config_to_json);

    m.def("parse_config", &qwalk::parse_config, py::arg("text"));
    m.def(
        "run", [](const qwalk::RunConfig &config) { return report_dict(qwalk::run(config)); }, py::arg("config"),
        "Run a configuration, write its files and return a summary dict.");
    m.def(
        "replay",
        [](const std::string &manifest_text, const std::string &output_dir) {
            auto [config, schedules] = qwalk::read_manifest(manifest_text);
            config.output_dir = output_dir;
            return report_dict(qwalk::run(config, schedules));
        },
        py::arg("manifest_text"), py::arg("output_dir"));
}
