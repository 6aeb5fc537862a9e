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

#include "vaging/simulation.hpp"

#include <cmath>

#include "vaging/errors.hpp"

namespace vaging {

double thermal_noise_variance(double Ts, double dbm_per_hz)
{
    if (!(Ts > 0.0))
        throw ConfigError("thermal_noise_variance: Ts must be positive");
    const double bandwidth = 1.0 / Ts;
    return std::pow(10.0, (dbm_per_hz + 10.0 * std::log10(bandwidth)) / 10.0) / 1000.0;
}

double SimulationConfig::kappa_T() const
{
    return kappa_T_override ? *kappa_T_override : sigma_to_kappa(sigma_T_deg);
}

double SimulationConfig::kappa_R() const
{
    return kappa_R_override ? *kappa_R_override : sigma_to_kappa(sigma_R_deg);
}

void SimulationConfig::validate() const
{
    array.validate();
    if (layout.cells() < 1)
        throw ConfigError("config: layout has no BS");
    if (layout.lanes.empty())
        throw ConfigError("config: layout has no lanes");
    if (!(Ts > 0.0))
        throw ConfigError("config: Ts must be positive");
    if (T < 1)
        throw ConfigError("config: pilot length T must be >= 1");
    if (!(power >= 0.0))
        throw ConfigError("config: transmit power must be non-negative");
    if (!(noise_var > 0.0))
        throw ConfigError("config: noise variance must be positive");
    if (!(v >= 0.0))
        throw ConfigError("config: speed must be non-negative");
    if (!(shadow_std_db >= 0.0))
        throw ConfigError("config: shadow standard deviation must be non-negative");
    if (n_channel < 1)
        throw ConfigError("config: need at least one channel realization");
    if (stride < 1)
        throw ConfigError("config: stride must be >= 1");
    if (model == CorrelationModel::Legacy && !(sigma_R_deg > 0.0))
        throw ConfigError("config: legacy model needs sigma_R > 0");
    // Throws for non-positive spreads without an override.
    (void)kappa_T();
    (void)kappa_R();
    if (kappa_T() < 0.0 || kappa_R() < 0.0)
        throw ConfigError("config: concentrations must be non-negative");
}

std::vector<std::size_t> NetworkDrop::served_by(std::size_t bs) const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < serving.size(); ++k)
        if (serving[k] == bs)
            out.push_back(k);
    return out;
}

NetworkDrop make_drop(const SimulationConfig& cfg, std::uint64_t seed, std::size_t index)
{
    NetworkDrop drop;
    drop.index = index;
    Rng geometry(seed, Stream::Geometry, {index});
    drop.vues = drop_vues(cfg.layout, cfg.density, cfg.v, cfg.power, geometry);
    if (drop.vues.empty())
        throw ConfigError("make_drop: no VUE was placed (lanes shorter than the minimum gap?)");

    Rng shadow(seed, Stream::Shadow, {index});
    drop.shadow_db.assign(drop.vues.size(), std::vector<double>(cfg.layout.cells()));
    for (auto& row : drop.shadow_db)
        for (double& x : row)
            x = cfg.shadow_std_db * shadow.normal();

    drop.serving = associate(cfg.layout, drop.vues, drop.shadow_db);
    Rng pilot(seed, Stream::Pilot, {index});
    drop.pilots = assign_pilots(drop.vues.size(), cfg.T, pilot);
    return drop;
}

CellLinks build_cell(const SimulationConfig& cfg, const NetworkDrop& drop, std::size_t bs)
{
    const BaseStation& station = cfg.layout.bs_list.at(bs);
    const std::size_t K = drop.vues.size();
    const double kT = cfg.kappa_T();
    const double kR = cfg.kappa_R();

    CellLinks cell;
    cell.bs = bs;
    cell.links.reserve(K);
    cell.stats.T = cfg.T;
    cell.stats.noise_var = cfg.noise_var;
    for (std::size_t k = 0; k < K; ++k) {
        const Vue& vue = drop.vues[k];
        const double D = wrap_distance(cfg.layout, station, vue.x, vue.y);
        const LargeScale ls = path_gain(D, drop.shadow_db[k][bs]);
        const auto [phi_c, theta_c] = central_angles(cfg.layout, station, vue);
        AngularProfile profile(kT, kR, phi_c, theta_c, vue.gamma, station.alpha);
        SpatialMatrix R0 = cfg.model == CorrelationModel::VonMises
                               ? spatial_matrix(profile, cfg.array)
                               : legacy_spatial_matrix(theta_c, deg2rad(cfg.sigma_R_deg), cfg.array);
        cell.links.emplace_back(ls, profile, std::move(R0));
        cell.stats.gain.push_back(ls.gain_linear);
        cell.stats.R0.push_back(cell.links.back().R0.entries());
        cell.stats.power.push_back(vue.power);
    }
    return cell;
}

std::vector<std::vector<Complex>> aging_table(const SimulationConfig& cfg, const CellLinks& cell,
                                              const SymbolGrid& grid)
{
    const std::size_t K = cell.links.size();
    std::vector<std::vector<Complex>> table(grid.size(), std::vector<Complex>(K, Complex{1.0, 0.0}));
    if (cfg.no_aging)
        return table;
    for (std::size_t k = 0; k < K; ++k) {
        const AngularProfile& p = cell.links[k].profile;
        const AcfEvaluator rho(p, cfg.v, cfg.array);
        for (std::size_t g = 0; g < grid.size(); ++g) {
            const double tau = static_cast<double>(grid.indices()[g]) * cfg.Ts;
            table[g][k] = cfg.model == CorrelationModel::VonMises
                              ? rho(tau)
                              : legacy_acf(p.kappa_T(), p.phi_c(), cfg.v, cfg.array, tau);
        }
    }
    return table;
}

DropSe simulate_drop(const SimulationConfig& cfg, Combiner kind, const NetworkDrop& drop,
                     std::uint64_t seed, std::size_t n_max)
{
    DropSe out{SymbolGrid(n_max, cfg.stride), {}, {}};
    const std::size_t K = drop.vues.size();
    const std::size_t G = out.grid.size();
    const std::size_t R = cfg.n_channel;
    out.user_se = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(G));
    out.realization_sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(R), static_cast<Eigen::Index>(G));
    const auto M = static_cast<Eigen::Index>(cfg.array.M);
    const double inv_R = 1.0 / static_cast<double>(R);

    for (std::size_t b = 0; b < cfg.layout.cells(); ++b) {
        const std::vector<std::size_t> served = drop.served_by(b);
        if (served.empty())
            continue;
        const CellLinks cell = build_cell(cfg, drop, b);
        const auto rho = aging_table(cfg, cell, out.grid);
        const CellEstimator estimator(cell.stats, drop.pilots);
        const ErrorCovarianceCache error_cov(cell.stats, estimator.phi());
        const std::vector<CMatrix> E = error_cov.at_all(rho);

        CMatrix H0(M, static_cast<Eigen::Index>(K));
        for (std::size_t r = 0; r < R; ++r) {
            for (std::size_t k = 0; k < K; ++k) {
                Rng rng(seed, Stream::Channel, {drop.index, r, b, k});
                H0.col(static_cast<Eigen::Index>(k)) = draw_initial(cell.links[k].sqrt_GR0, rng);
            }
            Rng noise(seed, Stream::PilotNoise, {drop.index, r, b});
            const CMatrix Y = receive_pilots(cell.stats, H0, drop.pilots, noise);
            const CMatrix H_hat = estimator.estimate_all(cell.stats, Y);
            const BatchSinr batch(H_hat, cell.stats.power, served);
            for (std::size_t g = 0; g < G; ++g) {
                const std::vector<double> eta = batch.evaluate(kind, rho[g], E[g]);
                double total = 0.0;
                for (std::size_t s = 0; s < served.size(); ++s) {
                    const double se = std::log2(1.0 + eta[s]);
                    out.user_se(static_cast<Eigen::Index>(served[s]), static_cast<Eigen::Index>(g)) +=
                        inv_R * se;
                    total += se;
                }
                out.realization_sum(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(g)) += total;
            }
        }
    }
    return out;
}

std::vector<double> ase_from_grid(std::span<const double> sum_grid, const SymbolGrid& grid,
                                  std::span<const std::size_t> C_values, std::size_t T,
                                  std::size_t L)
{
    if (L < 1)
        throw ConfigError("ase_from_grid: need at least one cell");
    const std::vector<double> prefix = grid_prefix_sums(sum_grid, grid);
    std::vector<double> out;
    out.reserve(C_values.size());
    for (std::size_t C : C_values) {
        if (C <= T)
            throw ConfigError("ase_from_grid: block length C must exceed T");
        if (C - T > grid.n_max())
            throw ConfigError("ase_from_grid: C beyond the simulated symbol range");
        out.push_back(prefix[C - T] / (static_cast<double>(C) * static_cast<double>(L)));
    }
    return out;
}

} // namespace vaging
