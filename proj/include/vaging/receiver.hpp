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

#include "vaging/training.hpp"
#include "vaging/types.hpp"

namespace vaging {

enum class Combiner { MR, MMSE };

/// Data-phase state at one BS for one symbol index n. A view: the referenced
/// matrices must outlive it.
struct SymbolContext {
    std::size_t n = 1;
    std::span<const Complex> rho;  // rho_k[n] for every VUE
    std::span<const double> power; // P_k
    const CMatrix& estimates;      // columns h_hat_k[0]
    const CMatrix& E;              // sum_k P_k Q_k(n) + sigma_n^2 I
};

/// E(n) = sum_k P_k (G_k R_{0,k} - |rho_k[n]|^2 Phi_k) + sigma_n^2 I.
CMatrix error_covariance(const CellStatistics& stats, std::span<const CMatrix> phi,
                         std::span<const Complex> rho);

/// Same matrix split as base - sum_k |rho_k|^2 P_k Phi_k, reusing a
/// precomputed base = sum_k P_k G_k R_{0,k} + sigma_n^2 I.
class ErrorCovarianceCache {
public:
    ErrorCovarianceCache(const CellStatistics& stats, std::span<const CMatrix> phi);
    CMatrix at(std::span<const Complex> rho) const;
    /// E for every row of rho_table (one row per symbol index) in one product.
    std::vector<CMatrix> at_all(const std::vector<std::vector<Complex>>& rho_table) const;

private:
    CMatrix base_;
    Eigen::MatrixXcd phi_stack_; // M^2 x K, column k = vec(P_k Phi_k)

    // phi_stack_ viewed as a real 2 M^2 x K matrix (weights are real).
    Eigen::Map<const Eigen::MatrixXd> real_stack() const;
    Eigen::Index M_ = 0;
};

/// MR: v = h_hat_k.
CVector mr_combiner(const CVector& h_hat);

/// MMSE: v = P_k (sum_j P_j |rho_j|^2 h_hat_j h_hat_j^H + E)^{-1} h_hat_k.
CVector mmse_combiner(std::size_t k, const SymbolContext& ctx);

/// Effective SINR of VUE k with combiner v. Throws ZeroVector for v = 0.
double sinr(std::size_t k, const CVector& v, const SymbolContext& ctx);

CVector combiner(Combiner kind, std::size_t k, const SymbolContext& ctx);

/// SINR of several VUEs at one symbol through algebraic shortcuts that avoid
/// forming each combiner and each interference sum explicitly.
///
/// MR uses a cached Gram matrix of the estimates. MMSE factors
/// A = sum_j P_j |rho_j|^2 h_j h_j^H + E once per symbol; with v = A^{-1} h_k
/// the ratio collapses to a / (1 - a), a = P_k |rho_k|^2 h_k^H A^{-1} h_k.
class BatchSinr {
public:
    BatchSinr(const CMatrix& estimates, std::span<const double> power, std::vector<std::size_t> users);

    std::vector<double> mr(std::span<const Complex> rho, const CMatrix& E) const;
    std::vector<double> mmse(std::span<const Complex> rho, const CMatrix& E) const;
    std::vector<double> evaluate(Combiner kind, std::span<const Complex> rho, const CMatrix& E) const;

    const std::vector<std::size_t>& users() const { return users_; }

private:
    const CMatrix& H_;
    std::span<const double> power_;
    std::vector<std::size_t> users_;
    CMatrix H_users_;         // M x S
    Eigen::MatrixXd gram2_;   // S x K, |h_k^H h_j|^2
    RVector norms2_;          // ||h_k||^2
};

/// Evaluated symbol indices of a transmission block: n = 1..s, then 1 + s,
/// 1 + 2s, ... and always n_max. Unevaluated symbols take the value of the
/// nearest evaluated one, or the mean of two equidistant ones.
class SymbolGrid {
public:
    SymbolGrid(std::size_t n_max, std::size_t stride);

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t n_max() const { return n_max_; }
    std::size_t stride() const { return stride_; }
    std::size_t size() const { return indices_.size(); }
    /// Fill weights for symbol n: value = (1 - w_hi) v[lo] + w_hi v[hi], taken
    /// from the nearest evaluated symbol, with equidistant pairs split evenly.
    struct Fill {
        std::size_t lo;
        std::size_t hi;
        double w_hi;
    };
    Fill nearest(std::size_t n) const;
    double fill(std::span<const double> value_at_grid, std::size_t n) const;

private:
    std::size_t n_max_;
    std::size_t stride_;
    std::vector<std::size_t> indices_;
};

struct SeResult {
    std::vector<double> per_symbol_se; // length C - T
    double block_se = 0.0;
    std::vector<double> sinr_trace;    // SINR at the evaluated symbols within the block
};

/// SE_k = (1/C) sum_{n=1}^{C-T} log2(1 + eta[n]), eta given on the grid.
SeResult block_se(std::span<const double> sinr_at_grid, const SymbolGrid& grid, std::size_t C,
                  std::size_t T);

/// Running sums S[m] = sum_{n=1}^{m} fill(value, n) for m = 0..n_max, so
/// that a whole curve over block lengths costs one pass.
std::vector<double> grid_prefix_sums(std::span<const double> value_at_grid, const SymbolGrid& grid);

/// Area spectral efficiency sum_k SE_k / L.
double ase(std::span<const double> se_per_user, std::size_t L);

} // namespace vaging
