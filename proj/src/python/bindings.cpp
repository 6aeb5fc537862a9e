// SPDX-License-Identifier: Apache-2.0
//
// vaging: aging-channel simulator for massive MIMO vehicular uplink
// Copyright (C) 2026 The vaging authors
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

// Python bindings of the numerical core.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vaging/correlation.hpp"
#include "vaging/errors.hpp"
#include "vaging/simulation.hpp"
#include "vaging/special_functions.hpp"
#include "vaging/sweep.hpp"

namespace py = pybind11;
using namespace vaging;

namespace {

ArrayGeometry make_array(std::size_t M, double d, double f_c)
{
    ArrayGeometry a;
    a.M = M;
    a.d = d;
    a.f_c = f_c;
    return a;
}

SimulationConfig make_config(const std::string& scenario, std::size_t M, double v, double sigma_T_deg,
                             double sigma_R_deg, std::size_t n_channel, std::size_t stride, bool no_aging)
{
    SimulationConfig cfg;
    if (scenario_from_string(scenario) == Scenario::Manhattan) {
        cfg.layout = build_manhattan();
        cfg.density = 0.0125;
    }
    cfg.array.M = M;
    cfg.v = v;
    cfg.sigma_T_deg = sigma_T_deg;
    cfg.sigma_R_deg = sigma_R_deg;
    cfg.n_channel = n_channel;
    cfg.stride = stride;
    cfg.no_aging = no_aging;
    cfg.validate();
    return cfg;
}

} // namespace

PYBIND11_MODULE(_vaging, m)
{
    m.doc() = "Aging-channel massive MIMO vehicular uplink simulator";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def("i0_of_sqrt", [](Complex w) {
        const auto r = i0_of_sqrt(w);
        return py::make_tuple(r.log_scale, r.mantissa);
    }, py::arg("w"), "I0(sqrt(w)) as (log_scale, mantissa); value = mantissa * exp(log_scale).");
    m.def("j0", [](double x) { return vaging::j0(x); }, py::arg("x"));
    m.def("sigma_to_kappa", &sigma_to_kappa, py::arg("sigma_deg"));
    m.def("coherence_block", &coherence_block, py::arg("v"), py::arg("f_c") = 2e9, py::arg("Ts") = 1e-5);
    m.def("thermal_noise_variance", &thermal_noise_variance, py::arg("Ts"), py::arg("dbm_per_hz") = -174.0);

    m.def("acf", [](double tau, double v, double kappa_T, double phi_c, double gamma, double f_c) {
        const AngularProfile p(kappa_T, 0.0, phi_c, 0.0, gamma, 0.0);
        return acf(p, v, make_array(1, 0.5 * kSpeedOfLight / f_c, f_c), tau);
    }, py::arg("tau"), py::arg("v"), py::arg("kappa_T"), py::arg("phi_c") = 0.0, py::arg("gamma") = 0.0,
       py::arg("f_c") = 2e9);

    m.def("scf", [](std::size_t p, std::size_t q, double kappa_R, double theta_c, double alpha, std::size_t M,
                    double d, double f_c) {
        const AngularProfile prof(0.0, kappa_R, 0.0, theta_c, 0.0, alpha);
        return scf(prof, make_array(M, d, f_c), p, q);
    }, py::arg("p"), py::arg("q"), py::arg("kappa_R"), py::arg("theta_c") = 0.0, py::arg("alpha") = 0.0,
       py::arg("M") = 32, py::arg("d") = 0.075, py::arg("f_c") = 2e9);

    m.def("spatial_matrix", [](double kappa_R, double theta_c, double alpha, std::size_t M, double d, double f_c) {
        const AngularProfile prof(0.0, kappa_R, 0.0, theta_c, 0.0, alpha);
        return CMatrix(spatial_matrix(prof, make_array(M, d, f_c)).entries());
    }, py::arg("kappa_R"), py::arg("theta_c") = 0.0, py::arg("alpha") = 0.0, py::arg("M") = 32,
       py::arg("d") = 0.075, py::arg("f_c") = 2e9);

    m.def("find_copt", [](const std::vector<std::size_t>& c_grid, const std::vector<double>& ase) {
        const CoptResult r = find_copt(c_grid, ase);
        py::dict d;
        d["c_opt"] = r.c_opt;
        d["index"] = r.index;
        d["at_endpoint"] = r.at_endpoint;
        return d;
    }, py::arg("c_grid"), py::arg("ase"));

    m.def("fit_copt_model", [](const std::vector<double>& v, const std::vector<double>& sigma_T_deg,
                               const std::vector<double>& sigma_R_deg, const std::vector<double>& c_opt) {
        if (v.size() != c_opt.size() || sigma_T_deg.size() != c_opt.size() || sigma_R_deg.size() != c_opt.size())
            throw ConfigError("fit_copt_model: inputs differ in length");
        std::vector<FitSample> samples(c_opt.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            samples[i].point.v = v[i];
            samples[i].point.sigma_T_deg = sigma_T_deg[i];
            samples[i].point.sigma_R_deg = sigma_R_deg[i];
            samples[i].c_opt = c_opt[i];
        }
        const FitModel f = fit_copt_model(samples);
        py::dict d;
        d["a0"] = f.coeffs[0];
        d["a_v"] = f.coeffs[1];
        d["a_T"] = f.coeffs[2];
        d["a_R"] = f.coeffs[3];
        d["r2bar"] = f.r2bar;
        d["nrmse"] = f.nrmse;
        d["warnings"] = f.warnings;
        return d;
    }, py::arg("v"), py::arg("sigma_T_deg"), py::arg("sigma_R_deg"), py::arg("c_opt"));

    m.def("ase_curve", [](const std::string& scenario, const std::string& combiner, std::size_t M, double v,
                          double sigma_T_deg, double sigma_R_deg, std::size_t n_drops, std::size_t n_channel,
                          std::size_t stride, std::uint64_t seed, std::size_t c_stop, std::size_t threads,
                          bool no_aging) {
        const SimulationConfig cfg = make_config(scenario, M, v, sigma_T_deg, sigma_R_deg, n_channel, stride, no_aging);
        CGrid grid;
        grid.stop = c_stop;
        AseCurve c;
        {
            py::gil_scoped_release release;
            c = ase_curve(cfg, combiner_from_string(combiner), grid, MonteCarlo{n_drops, seed, threads});
        }
        py::dict d;
        d["C"] = c.c_grid;
        d["ase_mean"] = c.ase_mean;
        d["ase_stderr"] = c.ase_stderr;
        d["c_opt"] = c.c_opt;
        d["endpoint_warning"] = c.endpoint_warning;
        return d;
    }, py::arg("scenario") = "freeway", py::arg("combiner") = "mr", py::arg("M") = 32, py::arg("v") = 33.33,
       py::arg("sigma_T_deg") = 35.0, py::arg("sigma_R_deg") = 15.0, py::arg("n_drops") = 20,
       py::arg("n_channel") = 10, py::arg("stride") = 8, py::arg("seed") = 1, py::arg("c_stop") = 1000,
       py::arg("threads") = 1, py::arg("no_aging") = false);
}
