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

#include "vaging/receiver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "vaging/errors.hpp"

namespace vaging {

CMatrix error_covariance(const CellStatistics& stats, std::span<const CMatrix> phi,
                         std::span<const Complex> rho)
{
    const auto M = static_cast<Eigen::Index>(stats.antennas());
    CMatrix E = stats.noise_var * CMatrix::Identity(M, M);
    for (std::size_t k = 0; k < stats.users(); ++k)
        E += stats.power[k] * (stats.gain[k] * stats.R0[k] - std::norm(rho[k]) * phi[k]);
    return E;
}

ErrorCovarianceCache::ErrorCovarianceCache(const CellStatistics& stats, std::span<const CMatrix> phi)
    : M_(static_cast<Eigen::Index>(stats.antennas()))
{
    const std::size_t K = stats.users();
    base_ = stats.noise_var * CMatrix::Identity(M_, M_);
    phi_stack_.resize(M_ * M_, static_cast<Eigen::Index>(K));
    for (std::size_t k = 0; k < K; ++k) {
        base_ += (stats.power[k] * stats.gain[k]) * stats.R0[k];
        phi_stack_.col(static_cast<Eigen::Index>(k)) =
            stats.power[k] * phi[k].reshaped();
    }
}

Eigen::Map<const Eigen::MatrixXd> ErrorCovarianceCache::real_stack() const
{
    return {reinterpret_cast<const double*>(phi_stack_.data()), 2 * phi_stack_.rows(), phi_stack_.cols()};
}

CMatrix ErrorCovarianceCache::at(std::span<const Complex> rho) const
{
    Eigen::VectorXd w(phi_stack_.cols());
    for (Eigen::Index k = 0; k < w.size(); ++k)
        w[k] = std::norm(rho[static_cast<std::size_t>(k)]);
    const Eigen::VectorXd sub = real_stack() * w;
    CMatrix E = base_;
    E.reshaped() -= Eigen::Map<const CVector>(reinterpret_cast<const Complex*>(sub.data()), M_ * M_);
    return E;
}

std::vector<CMatrix> ErrorCovarianceCache::at_all(const std::vector<std::vector<Complex>>& rho_table) const
{
    const auto G = static_cast<Eigen::Index>(rho_table.size());
    Eigen::MatrixXd W(phi_stack_.cols(), G);
    for (Eigen::Index g = 0; g < G; ++g)
        for (Eigen::Index k = 0; k < W.rows(); ++k)
            W(k, g) = std::norm(rho_table[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)]);
    const Eigen::MatrixXd sub = real_stack() * W;
    std::vector<CMatrix> out;
    out.reserve(rho_table.size());
    for (Eigen::Index g = 0; g < G; ++g) {
        CMatrix E = base_;
        E.reshaped() -= Eigen::Map<const CVector>(reinterpret_cast<const Complex*>(sub.col(g).data()), M_ * M_);
        out.push_back(std::move(E));
    }
    return out;
}

CVector mr_combiner(const CVector& h_hat) { return h_hat; }

namespace {

// sum_j P_j |rho_j|^2 h_j h_j^H + E
CMatrix mmse_system(const SymbolContext& ctx)
{
    CMatrix A = ctx.E;
    for (Eigen::Index j = 0; j < ctx.estimates.cols(); ++j) {
        const double w = ctx.power[static_cast<std::size_t>(j)] *
                         std::norm(ctx.rho[static_cast<std::size_t>(j)]);
        if (w != 0.0)
            A.noalias() += w * ctx.estimates.col(j) * ctx.estimates.col(j).adjoint();
    }
    return A;
}

} // namespace

CVector mmse_combiner(std::size_t k, const SymbolContext& ctx)
{
    const CMatrix A = mmse_system(ctx);
    Eigen::LLT<CMatrix> llt(A);
    if (llt.info() != Eigen::Success)
        throw SolveFailure("mmse_combiner: system matrix is not positive definite");
    return ctx.power[k] * llt.solve(ctx.estimates.col(static_cast<Eigen::Index>(k)));
}

double sinr(std::size_t k, const CVector& v, const SymbolContext& ctx)
{
    if (v.squaredNorm() == 0.0)
        throw ZeroVector("sinr: combining vector is zero");
    const CVector proj = ctx.estimates.adjoint() * v; // conj(v^H h_j)
    double signal = 0.0;
    double interference = 0.0;
    for (Eigen::Index j = 0; j < proj.size(); ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const double term = ctx.power[ju] * std::norm(ctx.rho[ju] * proj[j]);
        if (ju == k)
            signal = term;
        else
            interference += term;
    }
    const double noise = v.dot(ctx.E * v).real();
    return signal / (interference + noise);
}

CVector combiner(Combiner kind, std::size_t k, const SymbolContext& ctx)
{
    return kind == Combiner::MR ? mr_combiner(ctx.estimates.col(static_cast<Eigen::Index>(k)))
                                : mmse_combiner(k, ctx);
}

BatchSinr::BatchSinr(const CMatrix& estimates, std::span<const double> power,
                     std::vector<std::size_t> users)
    : H_(estimates), power_(power), users_(std::move(users))
{
    const auto S = static_cast<Eigen::Index>(users_.size());
    H_users_.resize(H_.rows(), S);
    for (Eigen::Index s = 0; s < S; ++s)
        H_users_.col(s) = H_.col(static_cast<Eigen::Index>(users_[static_cast<std::size_t>(s)]));
    const CMatrix gram = H_users_.adjoint() * H_;
    gram2_ = gram.cwiseAbs2();
    norms2_.resize(S);
    for (Eigen::Index s = 0; s < S; ++s)
        norms2_[s] = H_users_.col(s).squaredNorm();
}

std::vector<double> BatchSinr::mr(std::span<const Complex> rho, const CMatrix& E) const
{
    const auto S = static_cast<Eigen::Index>(users_.size());
    RVector weight(H_.cols());
    for (Eigen::Index j = 0; j < weight.size(); ++j)
        weight[j] = power_[static_cast<std::size_t>(j)] * std::norm(rho[static_cast<std::size_t>(j)]);

    const CMatrix EH = E * H_users_;
    const RVector all = gram2_ * weight; // sum_j P_j |rho_j|^2 |h_k^H h_j|^2
    std::vector<double> out(static_cast<std::size_t>(S));
    for (Eigen::Index s = 0; s < S; ++s) {
        const std::size_t k = users_[static_cast<std::size_t>(s)];
        const double signal = weight[static_cast<Eigen::Index>(k)] * norms2_[s] * norms2_[s];
        const double noise = H_users_.col(s).dot(EH.col(s)).real();
        if (norms2_[s] == 0.0) {
            out[static_cast<std::size_t>(s)] = 0.0;
            continue;
        }
        out[static_cast<std::size_t>(s)] = signal / (all[s] - signal + noise);
    }
    return out;
}

std::vector<double> BatchSinr::mmse(std::span<const Complex> rho, const CMatrix& E) const
{
    const Eigen::Index K = H_.cols();
    CMatrix scaled(H_.rows(), K);
    for (Eigen::Index j = 0; j < K; ++j)
        scaled.col(j) = std::sqrt(power_[static_cast<std::size_t>(j)] *
                                  std::norm(rho[static_cast<std::size_t>(j)])) *
                        H_.col(j);
    CMatrix A = E;
    A.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
    Eigen::LLT<CMatrix, Eigen::Lower> llt(A);
    if (llt.info() != Eigen::Success)
        throw SolveFailure("BatchSinr: MMSE system matrix is not positive definite");

    // h^H A^{-1} h = ||L^{-1} h||^2
    const CMatrix half = llt.matrixL().solve(H_users_);
    std::vector<double> out(users_.size());
    for (std::size_t s = 0; s < users_.size(); ++s) {
        const std::size_t k = users_[s];
        const double q = half.col(static_cast<Eigen::Index>(s)).squaredNorm();
        const double a = power_[k] * std::norm(rho[k]) * q;
        out[s] = a >= 1.0 ? 0.0 : a / (1.0 - a);
    }
    return out;
}

std::vector<double> BatchSinr::evaluate(Combiner kind, std::span<const Complex> rho,
                                        const CMatrix& E) const
{
    return kind == Combiner::MR ? mr(rho, E) : mmse(rho, E);
}

SymbolGrid::SymbolGrid(std::size_t n_max, std::size_t stride) : n_max_(n_max), stride_(stride)
{
    if (stride == 0)
        throw ConfigError("SymbolGrid: stride must be >= 1");
    if (n_max == 0)
        throw ConfigError("SymbolGrid: need at least one data symbol");
    // Every symbol of the first stride is evaluated: the SE falls fastest right
    // after the pilots, and a coarse head would bias every block sum upward.
    for (std::size_t n = 1; n <= std::min(stride, n_max); ++n)
        indices_.push_back(n);
    for (std::size_t n = 1 + stride; n <= n_max; n += stride)
        indices_.push_back(n);
    if (indices_.back() != n_max)
        indices_.push_back(n_max);
}

SymbolGrid::Fill SymbolGrid::nearest(std::size_t n) const
{
    if (n < 1 || n > n_max_)
        throw ConfigError("SymbolGrid: symbol index outside 1..n_max");
    const auto it = std::lower_bound(indices_.begin(), indices_.end(), n);
    const auto hi = static_cast<std::size_t>(it - indices_.begin());
    if (*it == n)
        return {hi, hi, 0.0};
    const std::size_t lo = hi - 1;
    const std::size_t d_lo = n - indices_[lo];
    const std::size_t d_hi = indices_[hi] - n;
    if (d_lo < d_hi)
        return {lo, lo, 0.0};
    if (d_hi < d_lo)
        return {hi, hi, 0.0};
    return {lo, hi, 0.5};
}

double SymbolGrid::fill(std::span<const double> value_at_grid, std::size_t n) const
{
    const Fill f = nearest(n);
    if (f.lo == f.hi)
        return value_at_grid[f.lo];
    return (1.0 - f.w_hi) * value_at_grid[f.lo] + f.w_hi * value_at_grid[f.hi];
}

SeResult block_se(std::span<const double> sinr_at_grid, const SymbolGrid& grid, std::size_t C,
                  std::size_t T)
{
    if (C <= T)
        throw ConfigError("block_se: block length C must exceed pilot length T");
    const std::size_t n_data = C - T;
    if (n_data > grid.n_max())
        throw ConfigError("block_se: block extends beyond the evaluated symbol grid");
    if (sinr_at_grid.size() != grid.size())
        throw ConfigError("block_se: SINR trace does not match the symbol grid");

    SeResult r;
    r.per_symbol_se.resize(n_data);
    double total = 0.0;
    for (std::size_t n = 1; n <= n_data; ++n) {
        const SymbolGrid::Fill f = grid.nearest(n);
        const double se = (1.0 - f.w_hi) * std::log2(1.0 + sinr_at_grid[f.lo]) +
                          f.w_hi * std::log2(1.0 + sinr_at_grid[f.hi]);
        r.per_symbol_se[n - 1] = se;
        total += se;
    }
    for (std::size_t i = 0; i < grid.size() && grid.indices()[i] <= n_data; ++i)
        r.sinr_trace.push_back(sinr_at_grid[i]);
    r.block_se = total / static_cast<double>(C);
    return r;
}

std::vector<double> grid_prefix_sums(std::span<const double> value_at_grid, const SymbolGrid& grid)
{
    if (value_at_grid.size() != grid.size())
        throw ConfigError("grid_prefix_sums: values do not match the symbol grid");
    std::vector<double> prefix(grid.n_max() + 1, 0.0);
    for (std::size_t n = 1; n <= grid.n_max(); ++n)
        prefix[n] = prefix[n - 1] + grid.fill(value_at_grid, n);
    return prefix;
}

double ase(std::span<const double> se_per_user, std::size_t L)
{
    if (L < 1)
        throw ConfigError("ase: need at least one cell");
    double total = 0.0;
    for (double se : se_per_user)
        total += se;
    return total / static_cast<double>(L);
}

} // namespace vaging
