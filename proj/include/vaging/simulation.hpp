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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vaging/channel.hpp"
#include "vaging/correlation.hpp"
#include "vaging/receiver.hpp"
#include "vaging/scenarios.hpp"
#include "vaging/training.hpp"

namespace vaging {

enum class CorrelationModel { VonMises, Legacy };

/// Thermal noise power [W] over the symbol-rate bandwidth 1/Ts.
double thermal_noise_variance(double Ts, double dbm_per_hz = -174.0);

/// Physical and Monte Carlo parameters of one simulated operating point.
struct SimulationConfig {
    NetworkLayout layout = build_freeway();
    ArrayGeometry array;
    double Ts = 1e-5;
    std::size_t T = 40;
    double power = 0.1;
    double noise_var = thermal_noise_variance(1e-5);
    double density = 0.004; // VUEs per meter per lane
    double v = 33.33;
    double sigma_T_deg = 35.0;
    double sigma_R_deg = 15.0;
    std::optional<double> kappa_T_override;
    std::optional<double> kappa_R_override;
    CorrelationModel model = CorrelationModel::VonMises;
    bool no_aging = false; // force rho = 1 during the data phase
    double shadow_std_db = 10.0;
    std::size_t n_channel = 10;
    std::size_t stride = 1;

    double kappa_T() const;
    double kappa_R() const;
    void validate() const;
};

/// One frozen network snapshot.
struct NetworkDrop {
    std::size_t index = 0;
    std::vector<Vue> vues;
    std::vector<std::vector<double>> shadow_db; // [VUE][BS]
    std::vector<std::size_t> serving;
    PilotAssignment pilots;

    std::vector<std::size_t> served_by(std::size_t bs) const;
};

/// Geometry, shadowing, association and pilots of drop `index`. Streams are
/// keyed by the drop index only, so different operating points see common
/// random numbers wherever their draws line up.
NetworkDrop make_drop(const SimulationConfig& cfg, std::uint64_t seed, std::size_t index);

/// Every VUE's link to one BS with the statistics the BS works from.
struct CellLinks {
    std::size_t bs = 0;
    std::vector<LinkState> links;
    CellStatistics stats;
};

CellLinks build_cell(const SimulationConfig& cfg, const NetworkDrop& drop, std::size_t bs);

/// rho_k at symbol n for every VUE of the cell, one row per grid index.
std::vector<std::vector<Complex>> aging_table(const SimulationConfig& cfg, const CellLinks& cell,
                                              const SymbolGrid& grid);

/// Per-symbol SE of one drop on a symbol grid.
struct DropSe {
    SymbolGrid grid;
    Eigen::MatrixXd user_se;         // K x G, mean over realizations of log2(1 + eta)
    Eigen::MatrixXd realization_sum; // R x G, sum over VUEs per realization
};

/// Simulates cfg.n_channel channel realizations of a drop and records the
/// per-symbol SE of every served VUE for n = 1..n_max (decimated by
/// cfg.stride).
DropSe simulate_drop(const SimulationConfig& cfg, Combiner kind, const NetworkDrop& drop,
                     std::uint64_t seed, std::size_t n_max);

/// ASE(C) = (1 / (L C)) sum_{n=1}^{C-T} S[n] for each requested C, where
/// sum_grid holds S at the grid symbols.
std::vector<double> ase_from_grid(std::span<const double> sum_grid, const SymbolGrid& grid,
                                  std::span<const std::size_t> C_values, std::size_t T,
                                  std::size_t L);

} // namespace vaging
