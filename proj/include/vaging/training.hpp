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
#include <span>
#include <vector>

#include <Eigen/Cholesky>

#include "vaging/rng.hpp"
#include "vaging/types.hpp"

namespace vaging {

/// Random assignment of T orthogonal pilots to K VUEs.
struct PilotAssignment {
    std::vector<std::size_t> pilot_of;               // VUE -> pilot in [0, T)
    std::vector<std::vector<std::size_t>> cohort_of; // pilot -> VUEs sharing it

    std::size_t users() const { return pilot_of.size(); }
    std::size_t pilots() const { return cohort_of.size(); }
    const std::vector<std::size_t>& cohort(std::size_t k) const { return cohort_of[pilot_of[k]]; }
};

/// Each VUE independently draws a pilot uniformly from [0, T). Collisions are
/// allowed whatever the ratio K/T.
PilotAssignment assign_pilots(std::size_t K, std::size_t T, Rng& rng);

/// Second-order statistics of every VUE's link to one receiving BS, as known
/// to that BS's estimator.
struct CellStatistics {
    std::vector<double> gain;  // G_k (linear)
    std::vector<CMatrix> R0;   // R_{0,k}
    std::vector<double> power; // P_k [W]
    double noise_var = 0.0;    // sigma_n^2 [W]
    std::size_t T = 40;        // pilot length

    std::size_t users() const { return gain.size(); }
    std::size_t antennas() const { return R0.empty() ? 0 : static_cast<std::size_t>(R0.front().rows()); }

    /// zeta_k = P_k T G_k / sigma_n^2.
    double zeta(std::size_t k) const;
};

/// Psi = sum_{k in cohort} P_k T G_k R_{0,k} + sigma_n^2 I.
CMatrix pilot_covariance(const CellStatistics& stats, std::span<const std::size_t> cohort);

/// Processed pilot observations at one BS, one column per pilot:
/// y_t = sum_{k in cohort t} sqrt(P_k T) h_k[0] + n_t, n_t ~ CN(0, sigma_n^2 I).
/// H0 holds the true h_k[0] of all VUEs as columns.
CMatrix receive_pilots(const CellStatistics& stats, const CMatrix& H0, const PilotAssignment& pilots,
                       Rng& rng);

/// MMSE estimate of one VUE's channel with its error statistics.
struct Estimate {
    CVector h_hat;
    CMatrix Phi; // covariance of h_hat
    CMatrix Psi; // covariance of the processed pilot signal
    CMatrix GR0; // G R0 of this link

    /// Accumulative error covariance Q(n) = G R0 - |rho[n]|^2 Phi.
    CMatrix Q(Complex rho) const { return GR0 - std::norm(rho) * Phi; }
};

Estimate mmse_estimate(std::size_t k, const CVector& y_p, const CellStatistics& stats,
                       const PilotAssignment& pilots);

/// Batched estimator for every VUE at one BS. Factors each pilot's Psi once
/// and precomputes all Phi_k; per-realization work is then two M x M products
/// per VUE.
class CellEstimator {
public:
    CellEstimator(const CellStatistics& stats, const PilotAssignment& pilots);

    /// Columns h_hat_k for k = 0..K-1 given processed pilots Y (M x T).
    CMatrix estimate_all(const CellStatistics& stats, const CMatrix& Y) const;

    const std::vector<CMatrix>& phi() const { return phi_; }
    const CMatrix& phi(std::size_t k) const { return phi_[k]; }

private:
    PilotAssignment pilots_;
    std::vector<Eigen::LLT<CMatrix>> psi_llt_;
    std::vector<CMatrix> phi_;
    std::vector<double> scale_; // sqrt(P_k T) G_k
};

/// Normalized MSE of the accumulative error at aging coefficient rho:
/// 1 - |rho|^2 zeta_k tr(R0 (Theta_npc + Theta_pc)^{-1} R0) / tr(R0).
double nmse(std::size_t k, Complex rho, const CellStatistics& stats, const PilotAssignment& pilots);

/// Lower bound without pilot contamination in terms of the R0 spectrum,
/// 1 - |rho|^2 zeta / M * sum l^2 / (zeta l + 1).
double nmse_npc_bound(Complex rho, double zeta, std::span<const double> eigenvalues);
double nmse_npc_bound(Complex rho, double zeta, const CMatrix& R0);

} // namespace vaging
