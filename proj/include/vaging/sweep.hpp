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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vaging/receiver.hpp"
#include "vaging/scenarios.hpp"
#include "vaging/simulation.hpp"

namespace vaging {

struct SweepPoint {
    Scenario scenario = Scenario::Freeway;
    Combiner combiner = Combiner::MR;
    double sigma_T_deg = 35.0;
    double sigma_R_deg = 15.0;
    double v = 33.33;
};

std::string to_string(Combiner c);
Combiner combiner_from_string(const std::string& name);

/// Copy of base with the point's spreads and speed applied. The layout is
/// taken from base; a scenario mismatch is a ConfigError.
SimulationConfig apply_point(const SimulationConfig& base, const SweepPoint& point);

/// Block-length grid: coarse start:step:stop, then a refinement window of
/// +-refine_halfwidth at refine_step around the coarse argmax.
struct CGrid {
    std::size_t start = 60;
    std::size_t stop = 1000;
    std::size_t step = 20;
    std::size_t refine_step = 5;
    std::size_t refine_halfwidth = 40;

    std::vector<std::size_t> coarse() const;
    void validate(std::size_t T) const;
};

struct MonteCarlo {
    std::size_t n_drops = 20;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
};

struct MeanStderr {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Sample mean and its standard error (sample sd / sqrt(n); 0 for n = 1).
MeanStderr mean_stderr(std::span<const double> samples);

/// Per-drop ASE for every C in 0..C_max (row = drop, column = C; entries with
/// C <= T are NaN). Each drop averages cfg.n_channel realizations.
Eigen::MatrixXd drop_ase_curves(const SimulationConfig& cfg, Combiner kind, std::size_t C_max,
                                const MonteCarlo& mc);

struct AseCurve {
    std::vector<std::size_t> c_grid;
    std::vector<double> ase_mean;
    std::vector<double> ase_stderr;
    std::size_t c_opt = 0;
    bool endpoint_warning = false; // coarse argmax at a grid endpoint
};

/// ASE vs C over the coarse grid plus its refinement window, from one
/// simulation pass up to the largest C.
AseCurve ase_curve(const SimulationConfig& cfg, Combiner kind, const CGrid& grid, const MonteCarlo& mc);

/// Same curve assembled from precomputed per-drop curves.
AseCurve ase_curve_from_samples(const Eigen::MatrixXd& drop_curves, const CGrid& grid, std::size_t T);

/// Monte Carlo ASE at one block length.
MeanStderr ase_at(const SimulationConfig& cfg, Combiner kind, std::size_t C, const MonteCarlo& mc);

struct CoptResult {
    std::size_t c_opt = 0;
    std::size_t index = 0;
    bool at_endpoint = false;
};

/// Argmax over the grid, ties to the smallest C. Throws EmptyCurve for fewer
/// than three points.
CoptResult find_copt(std::span<const std::size_t> c_grid, std::span<const double> ase);

struct FitSample {
    SweepPoint point;
    double c_opt = 0.0;
};

/// C* = a0 + a_v v + a_T sqrt(sigma_T) + a_R sqrt(sigma_R) (m/s, degrees).
struct FitModel {
    std::array<double, 4> coeffs{}; // a0, a_v, a_T, a_R
    double r2bar = 0.0;
    double nrmse = 0.0;
    std::vector<std::string> warnings;

    double predict(double v, double sigma_T_deg, double sigma_R_deg) const;
};

FitModel fit_copt_model(std::span<const FitSample> samples);

/// 1 - SSE / SST, clamped into [0, 1]; 0 with a warning when SST = 0.
double r2bar(std::span<const double> y, std::span<const double> y_fit, std::vector<std::string>* warnings = nullptr);

/// RMS residual normalized by max(y) - min(y); 0 with a warning when the range is 0.
double nrmse(std::span<const double> y, std::span<const double> y_fit, std::vector<std::string>* warnings = nullptr);

/// round(lambda / (4 v Ts)).
std::size_t coherence_block(double v, double f_c, double Ts);

struct DeltaAse {
    std::size_t c_star = 0;
    std::size_t c_v = 0;
    MeanStderr at_star;
    MeanStderr at_v;
    double delta = 0.0;
    double std_error = 0.0; // of the paired per-drop differences
};

/// ASE(C*) - ASE(C_v) on common drops. C* comes from the fitted model,
/// rounded and clamped to > T; C_v likewise clamped.
DeltaAse delta_ase(const SimulationConfig& cfg, Combiner kind, const FitModel& model, const MonteCarlo& mc);

/// Same with an explicit C* (the model is bypassed).
DeltaAse delta_ase_at(const SimulationConfig& cfg, Combiner kind, std::size_t c_star, const MonteCarlo& mc);

} // namespace vaging
