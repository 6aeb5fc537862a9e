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

#include "vaging/training.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "vaging/errors.hpp"

namespace vaging {

PilotAssignment assign_pilots(std::size_t K, std::size_t T, Rng& rng)
{
    if (K < 1 || T < 1)
        throw ConfigError("assign_pilots: need K >= 1 and T >= 1");
    PilotAssignment a;
    a.pilot_of.resize(K);
    a.cohort_of.assign(T, {});
    for (std::size_t k = 0; k < K; ++k) {
        const std::size_t t = rng.index(T);
        a.pilot_of[k] = t;
        a.cohort_of[t].push_back(k);
    }
    return a;
}

double CellStatistics::zeta(std::size_t k) const
{
    return power[k] * static_cast<double>(T) * gain[k] / noise_var;
}

CMatrix pilot_covariance(const CellStatistics& stats, std::span<const std::size_t> cohort)
{
    const auto M = static_cast<Eigen::Index>(stats.antennas());
    CMatrix psi = stats.noise_var * CMatrix::Identity(M, M);
    const double T = static_cast<double>(stats.T);
    for (std::size_t k : cohort)
        psi += (stats.power[k] * T * stats.gain[k]) * stats.R0[k];
    return psi;
}

CMatrix receive_pilots(const CellStatistics& stats, const CMatrix& H0, const PilotAssignment& pilots,
                       Rng& rng)
{
    const Eigen::Index M = H0.rows();
    const double T = static_cast<double>(stats.T);
    const double noise_sd = std::sqrt(stats.noise_var);
    CMatrix Y(M, static_cast<Eigen::Index>(pilots.pilots()));
    for (std::size_t t = 0; t < pilots.pilots(); ++t) {
        CVector y = CVector::Zero(M);
        for (std::size_t k : pilots.cohort_of[t])
            y += std::sqrt(stats.power[k] * T) * H0.col(static_cast<Eigen::Index>(k));
        if (noise_sd > 0.0)
            y += noise_sd * rng.complex_normal_vector(static_cast<std::size_t>(M));
        Y.col(static_cast<Eigen::Index>(t)) = y;
    }
    return Y;
}

namespace {

Eigen::LLT<CMatrix> factor_psd(const CMatrix& psi)
{
    Eigen::LLT<CMatrix> llt(psi);
    if (llt.info() != Eigen::Success)
        throw SolveFailure("pilot covariance is not positive definite");
    return llt;
}

CMatrix hermitian_part(const CMatrix& A) { return 0.5 * (A + A.adjoint()); }

} // namespace

Estimate mmse_estimate(std::size_t k, const CVector& y_p, const CellStatistics& stats,
                       const PilotAssignment& pilots)
{
    Estimate e;
    const auto& cohort = pilots.cohort(k);
    e.Psi = pilot_covariance(stats, cohort);
    e.GR0 = stats.gain[k] * stats.R0[k];
    const auto llt = factor_psd(e.Psi);
    const double pt = stats.power[k] * static_cast<double>(stats.T);
    e.h_hat = std::sqrt(pt) * (e.GR0 * llt.solve(y_p));
    e.Phi = hermitian_part(pt * (e.GR0 * llt.solve(e.GR0)));
    return e;
}

CellEstimator::CellEstimator(const CellStatistics& stats, const PilotAssignment& pilots)
    : pilots_(pilots)
{
    const std::size_t K = stats.users();
    const double T = static_cast<double>(stats.T);
    psi_llt_.reserve(pilots.pilots());
    for (std::size_t t = 0; t < pilots.pilots(); ++t)
        psi_llt_.push_back(factor_psd(pilot_covariance(stats, pilots.cohort_of[t])));

    phi_.resize(K);
    scale_.resize(K);
    for (std::size_t k = 0; k < K; ++k) {
        const double pt = stats.power[k] * T;
        const double g = stats.gain[k];
        scale_[k] = std::sqrt(pt) * g;
        const auto& llt = psi_llt_[pilots.pilot_of[k]];
        phi_[k] = hermitian_part((pt * g * g) * (stats.R0[k] * llt.solve(stats.R0[k])));
    }
}

CMatrix CellEstimator::estimate_all(const CellStatistics& stats, const CMatrix& Y) const
{
    const auto M = static_cast<Eigen::Index>(stats.antennas());
    const std::size_t K = stats.users();
    CMatrix whitened(M, Y.cols());
    for (std::size_t t = 0; t < pilots_.pilots(); ++t) {
        if (!pilots_.cohort_of[t].empty())
            whitened.col(static_cast<Eigen::Index>(t)) =
                psi_llt_[t].solve(Y.col(static_cast<Eigen::Index>(t)));
    }
    CMatrix H(M, static_cast<Eigen::Index>(K));
    for (std::size_t k = 0; k < K; ++k)
        H.col(static_cast<Eigen::Index>(k)).noalias() =
            scale_[k] * (stats.R0[k] * whitened.col(static_cast<Eigen::Index>(pilots_.pilot_of[k])));
    return H;
}

double nmse(std::size_t k, Complex rho, const CellStatistics& stats, const PilotAssignment& pilots)
{
    const auto M = static_cast<Eigen::Index>(stats.antennas());
    const CMatrix& R = stats.R0[k];
    const double zeta_k = stats.zeta(k);
    CMatrix theta = zeta_k * R + CMatrix::Identity(M, M); // Theta_npc
    for (std::size_t j : pilots.cohort(k)) {
        if (j != k)
            theta += stats.zeta(j) * stats.R0[j]; // Theta_pc
    }
    const Eigen::LLT<CMatrix> llt = factor_psd(theta);
    const double num = (R * llt.solve(R)).trace().real();
    const double den = R.trace().real();
    return 1.0 - std::norm(rho) * zeta_k * num / den;
}

double nmse_npc_bound(Complex rho, double zeta, std::span<const double> eigenvalues)
{
    double acc = 0.0;
    for (double l : eigenvalues)
        acc += l * l / (zeta * l + 1.0);
    return 1.0 - std::norm(rho) * zeta * acc / static_cast<double>(eigenvalues.size());
}

double nmse_npc_bound(Complex rho, double zeta, const CMatrix& R0)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(R0, Eigen::EigenvaluesOnly);
    const RVector l = eig.eigenvalues().cwiseMax(0.0);
    return nmse_npc_bound(rho, zeta, std::span<const double>(l.data(), static_cast<std::size_t>(l.size())));
}

} // namespace vaging
