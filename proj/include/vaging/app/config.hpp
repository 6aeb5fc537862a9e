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
#include <string>
#include <vector>

#include "vaging/scenarios.hpp"
#include "vaging/simulation.hpp"
#include "vaging/sweep.hpp"

namespace vaging::app {

inline constexpr int kSchemaVersion = 1;

struct LinkSettings {
    double Ts = 1e-5;
    std::size_t T = 40;
    double power = 0.1;
    double noise_dbm_per_hz = -174.0;
    std::optional<double> noise_var; // overrides the thermal noise when set
    double sigma_T_deg = 35.0;
    double sigma_R_deg = 15.0;
    std::optional<double> kappa_T;
    std::optional<double> kappa_R;
    std::string correlation = "von_mises"; // or "legacy"
    bool no_aging = false;
    double shadow_std_db = 10.0;
};

struct FreewaySettings {
    FreewayParams layout;
    double v = 33.33;
    double density = 0.004;
};

struct ManhattanSettings {
    ManhattanParams layout;
    double v = 16.67;
    double density = 0.0125;
};

struct SweepSettings {
    std::vector<std::string> scenarios{"freeway"};
    std::vector<std::string> combiners{"mr"};
    std::vector<double> sigma_T_deg{5.0, 20.0, 45.0};
    std::vector<double> sigma_R_deg{5.0, 20.0, 45.0};
    std::vector<double> v_freeway{19.44, 29.17, 38.89};
    std::vector<double> v_manhattan{8.33, 16.67, 25.0};
};

struct StccSettings {
    double d_max = 0.5;
    std::size_t d_points = 51;
    double tau_max = 5e-3;
    std::size_t tau_points = 51;
};

/// Every input of every subcommand. Defaults are the reference operating
/// point with the desk-scale antenna count M = 32; paper_fidelity() switches
/// to the full-scale M = 100.
struct RunConfig {
    std::string scenario = "freeway";
    std::string combiner = "mr";
    std::uint64_t seed = 1;
    ArrayGeometry array;
    LinkSettings link;
    FreewaySettings freeway;
    ManhattanSettings manhattan;
    std::size_t n_drops = 20;
    std::size_t n_channel = 10;
    std::size_t stride = 1;
    CGrid c_grid;
    SweepSettings sweep;
    std::size_t se_C = 200;
    StccSettings stcc;

    void paper_fidelity() { array.M = 100; }
    void validate() const;

    /// Simulation settings of a scenario at its default speed.
    SimulationConfig simulation(Scenario s) const;
    MonteCarlo monte_carlo(std::size_t threads) const { return {n_drops, seed, threads}; }
    std::vector<SweepPoint> sweep_points(Scenario s, Combiner c) const;
};

/// Canonical JSON text of a config (sorted keys, shortest round-trip doubles).
std::string to_json_text(const RunConfig& cfg);

/// Parses a config; missing fields keep their defaults, unknown fields are a
/// ConfigError.
RunConfig from_json_text(const std::string& text);

RunConfig load_config(const std::string& path);

} // namespace vaging::app
