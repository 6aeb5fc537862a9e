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

#include "vaging/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <Eigen/QR>

#include "vaging/errors.hpp"
#include "vaging/executor.hpp"

namespace vaging {

std::string to_string(Combiner c) { return c == Combiner::MR ? "mr" : "mmse"; }

Combiner combiner_from_string(const std::string& name)
{
    if (name == "mr")
        return Combiner::MR;
    if (name == "mmse")
        return Combiner::MMSE;
    throw ConfigError("unknown combiner '" + name + "' (expected mr or mmse)");
}

SimulationConfig apply_point(const SimulationConfig& base, const SweepPoint& point)
{
    if (base.layout.scenario != point.scenario)
        throw ConfigError("apply_point: point scenario does not match the configured layout");
    SimulationConfig cfg = base;
    cfg.sigma_T_deg = point.sigma_T_deg;
    cfg.sigma_R_deg = point.sigma_R_deg;
    cfg.v = point.v;
    return cfg;
}

std::vector<std::size_t> CGrid::coarse() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = start; c <= stop; c += step)
        out.push_back(c);
    return out;
}

void CGrid::validate(std::size_t T) const
{
    if (step < 1 || refine_step < 1)
        throw ConfigError("C grid: steps must be >= 1");
    if (start <= T)
        throw ConfigError("C grid: start must exceed the pilot length T");
    if (stop < start)
        throw ConfigError("C grid: stop must not precede start");
    if (coarse().size() < 3)
        throw ConfigError("C grid: need at least three coarse points");
}

MeanStderr mean_stderr(std::span<const double> samples)
{
    MeanStderr r;
    if (samples.empty())
        return r;
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    r.mean = sum / n;
    if (samples.size() > 1) {
        double ss = 0.0;
        for (double x : samples)
            ss += (x - r.mean) * (x - r.mean);
        r.std_error = std::sqrt(ss / (n - 1.0) / n);
    }
    return r;
}

Eigen::MatrixXd drop_ase_curves(const SimulationConfig& cfg, Combiner kind, std::size_t C_max,
                                const MonteCarlo& mc)
{
    cfg.validate();
    if (mc.n_drops < 1)
        throw ConfigError("Monte Carlo: need at least one drop");
    if (C_max <= cfg.T)
        throw ConfigError("drop_ase_curves: C_max must exceed T");
    const std::size_t n_max = C_max - cfg.T;
    const std::size_t L = cfg.layout.cells();

    std::vector<std::size_t> all_c;
    for (std::size_t c = cfg.T + 1; c <= C_max; ++c)
        all_c.push_back(c);

    Eigen::MatrixXd out(static_cast<Eigen::Index>(mc.n_drops), static_cast<Eigen::Index>(C_max + 1));
    out.setConstant(std::numeric_limits<double>::quiet_NaN());
    std::vector<std::vector<double>> rows(mc.n_drops);
    parallel_for(mc.n_drops, mc.threads, [&](std::size_t d) {
        const NetworkDrop drop = make_drop(cfg, mc.seed, d);
        const DropSe se = simulate_drop(cfg, kind, drop, mc.seed, n_max);
        const Eigen::VectorXd mean_sum = se.realization_sum.colwise().mean().transpose();
        rows[d] = ase_from_grid(std::span<const double>(mean_sum.data(), static_cast<std::size_t>(mean_sum.size())),
                                se.grid, all_c, cfg.T, L);
    });
    for (std::size_t d = 0; d < mc.n_drops; ++d)
        for (std::size_t i = 0; i < all_c.size(); ++i)
            out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(all_c[i])) = rows[d][i];
    return out;
}

namespace {

MeanStderr column_stats(const Eigen::MatrixXd& curves, std::size_t C)
{
    const Eigen::VectorXd col = curves.col(static_cast<Eigen::Index>(C));
    return mean_stderr(std::span<const double>(col.data(), static_cast<std::size_t>(col.size())));
}

} // namespace

AseCurve ase_curve_from_samples(const Eigen::MatrixXd& drop_curves, const CGrid& grid, std::size_t T)
{
    grid.validate(T);
    const std::size_t C_max = static_cast<std::size_t>(drop_curves.cols()) - 1;
    if (grid.stop > C_max)
        throw ConfigError("ase_curve: samples do not reach the end of the C grid");

    const std::vector<std::size_t> coarse = grid.coarse();
    std::vector<double> coarse_mean;
    for (std::size_t c : coarse)
        coarse_mean.push_back(column_stats(drop_curves, c).mean);
    const CoptResult first = find_copt(coarse, coarse_mean);

    std::set<std::size_t> cs(coarse.begin(), coarse.end());
    // Window aligned on the coarse argmax, kept inside the coarse range.
    const auto hw = static_cast<long long>(grid.refine_halfwidth);
    const auto centre = static_cast<long long>(first.c_opt);
    for (long long off = -hw; off <= hw; off += static_cast<long long>(grid.refine_step)) {
        const long long c = centre + off;
        if (c >= static_cast<long long>(grid.start) && c <= static_cast<long long>(grid.stop))
            cs.insert(static_cast<std::size_t>(c));
    }

    AseCurve curve;
    curve.endpoint_warning = first.at_endpoint;
    for (std::size_t c : cs) {
        const MeanStderr ms = column_stats(drop_curves, c);
        curve.c_grid.push_back(c);
        curve.ase_mean.push_back(ms.mean);
        curve.ase_stderr.push_back(ms.std_error);
    }
    curve.c_opt = find_copt(curve.c_grid, curve.ase_mean).c_opt;
    return curve;
}

AseCurve ase_curve(const SimulationConfig& cfg, Combiner kind, const CGrid& grid, const MonteCarlo& mc)
{
    grid.validate(cfg.T);
    std::size_t C_max = grid.coarse().back();
    return ase_curve_from_samples(drop_ase_curves(cfg, kind, C_max, mc), grid, cfg.T);
}

MeanStderr ase_at(const SimulationConfig& cfg, Combiner kind, std::size_t C, const MonteCarlo& mc)
{
    if (C <= cfg.T)
        throw ConfigError("ase_at: block length C must exceed T");
    return column_stats(drop_ase_curves(cfg, kind, C, mc), C);
}

CoptResult find_copt(std::span<const std::size_t> c_grid, std::span<const double> ase)
{
    if (c_grid.size() < 3)
        throw EmptyCurve("find_copt: need at least three grid points");
    if (c_grid.size() != ase.size())
        throw ConfigError("find_copt: grid and values differ in length");
    CoptResult r;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        if (ase[i] > best) {
            best = ase[i];
            r.index = i;
        }
    }
    r.c_opt = c_grid[r.index];
    r.at_endpoint = r.index == 0 || r.index + 1 == c_grid.size();
    return r;
}

double FitModel::predict(double v, double sigma_T_deg, double sigma_R_deg) const
{
    return coeffs[0] + coeffs[1] * v + coeffs[2] * std::sqrt(sigma_T_deg) + coeffs[3] * std::sqrt(sigma_R_deg);
}

double r2bar(std::span<const double> y, std::span<const double> y_fit, std::vector<std::string>* warnings)
{
    if (y.size() != y_fit.size() || y.empty())
        throw ConfigError("r2bar: need equally sized non-empty samples");
    double mean = 0.0;
    for (double x : y)
        mean += x;
    mean /= static_cast<double>(y.size());
    double sse = 0.0;
    double sst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        sse += (y[i] - y_fit[i]) * (y[i] - y_fit[i]);
        sst += (y[i] - mean) * (y[i] - mean);
    }
    if (sst == 0.0) {
        if (warnings)
            warnings->push_back("r2bar: targets have zero variance; reported as 0");
        return 0.0;
    }
    const double r = 1.0 - sse / sst;
    if (r < 0.0 && warnings)
        warnings->push_back("r2bar: fit worse than the mean; clamped to 0");
    return std::clamp(r, 0.0, 1.0);
}

double nrmse(std::span<const double> y, std::span<const double> y_fit, std::vector<std::string>* warnings)
{
    if (y.size() != y_fit.size() || y.empty())
        throw ConfigError("nrmse: need equally sized non-empty samples");
    const auto [mn, mx] = std::minmax_element(y.begin(), y.end());
    const double range = *mx - *mn;
    if (range == 0.0) {
        if (warnings)
            warnings->push_back("nrmse: targets have zero range; reported as 0");
        return 0.0;
    }
    double sse = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        sse += (y[i] - y_fit[i]) * (y[i] - y_fit[i]);
    return std::sqrt(sse / static_cast<double>(y.size())) / range;
}

FitModel fit_copt_model(std::span<const FitSample> samples)
{
    if (samples.size() < 5)
        throw ConfigError("fit_copt_model: need at least 5 samples");
    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd X(n, 4);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const SweepPoint& p = samples[static_cast<std::size_t>(i)].point;
        if (!(p.sigma_T_deg >= 0.0) || !(p.sigma_R_deg >= 0.0))
            throw DomainError("fit_copt_model: spreads must be non-negative");
        X(i, 0) = 1.0;
        X(i, 1) = p.v;
        X(i, 2) = std::sqrt(p.sigma_T_deg);
        X(i, 3) = std::sqrt(p.sigma_R_deg);
        y[i] = samples[static_cast<std::size_t>(i)].c_opt;
    }
    for (Eigen::Index j = 1; j < 4; ++j) {
        if (X.col(j).maxCoeff() == X.col(j).minCoeff())
            throw RankDeficient("fit_copt_model: a feature takes a single value");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(1e-12);
    if (qr.rank() < 4)
        throw RankDeficient("fit_copt_model: design matrix is rank deficient");
    const Eigen::VectorXd beta = qr.solve(y);

    FitModel model;
    for (int j = 0; j < 4; ++j)
        model.coeffs[static_cast<std::size_t>(j)] = beta[j];
    const Eigen::VectorXd fit = X * beta;
    const std::span<const double> ys(y.data(), static_cast<std::size_t>(n));
    const std::span<const double> fs(fit.data(), static_cast<std::size_t>(n));
    model.r2bar = r2bar(ys, fs, &model.warnings);
    model.nrmse = nrmse(ys, fs, &model.warnings);
    return model;
}

std::size_t coherence_block(double v, double f_c, double Ts)
{
    if (!(v > 0.0))
        throw DomainError("coherence_block: speed must be positive");
    if (!(f_c > 0.0) || !(Ts > 0.0))
        throw DomainError("coherence_block: f_c and Ts must be positive");
    const double lambda = kSpeedOfLight / f_c;
    return static_cast<std::size_t>(std::llround(lambda / (4.0 * v * Ts)));
}

DeltaAse delta_ase_at(const SimulationConfig& cfg, Combiner kind, std::size_t c_star, const MonteCarlo& mc)
{
    DeltaAse r;
    r.c_star = std::max(c_star, cfg.T + 1);
    r.c_v = std::max(coherence_block(cfg.v, cfg.array.f_c, cfg.Ts), cfg.T + 1);
    const Eigen::MatrixXd curves = drop_ase_curves(cfg, kind, std::max(r.c_star, r.c_v), mc);
    r.at_star = column_stats(curves, r.c_star);
    r.at_v = column_stats(curves, r.c_v);
    const Eigen::VectorXd diff = curves.col(static_cast<Eigen::Index>(r.c_star)) -
                                 curves.col(static_cast<Eigen::Index>(r.c_v));
    const MeanStderr d = mean_stderr(std::span<const double>(diff.data(), static_cast<std::size_t>(diff.size())));
    r.delta = d.mean;
    r.std_error = d.std_error;
    return r;
}

DeltaAse delta_ase(const SimulationConfig& cfg, Combiner kind, const FitModel& model, const MonteCarlo& mc)
{
    const double c = model.predict(cfg.v, cfg.sigma_T_deg, cfg.sigma_R_deg);
    const long long rounded = std::llround(c);
    const std::size_t c_star =
        rounded <= static_cast<long long>(cfg.T) ? cfg.T + 1 : static_cast<std::size_t>(rounded);
    return delta_ase_at(cfg, kind, c_star, mc);
}

} // namespace vaging
