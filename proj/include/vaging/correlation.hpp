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

#include "vaging/special_functions.hpp"
#include "vaging/types.hpp"

namespace vaging {

/// Scattering geometry of one VUE-BS link: von Mises concentrations of the
/// angle of departure (at the VUE) and arrival (at the BS), their central
/// directions, the VUE heading and the ULA orientation. Angles in radians,
/// stored reduced to [-pi, pi).
class AngularProfile {
public:
    AngularProfile() = default;
    AngularProfile(double kappa_T, double kappa_R, double phi_c, double theta_c, double gamma,
                   double alpha);

    double kappa_T() const { return kappa_T_; }
    double kappa_R() const { return kappa_R_; }
    double phi_c() const { return phi_c_; }
    double theta_c() const { return theta_c_; }
    double gamma() const { return gamma_; }
    double alpha() const { return alpha_; }

private:
    double kappa_T_ = 0.0;
    double kappa_R_ = 0.0;
    double phi_c_ = 0.0;
    double theta_c_ = 0.0;
    double gamma_ = 0.0;
    double alpha_ = 0.0;
};

/// Uniform linear array at the BS.
struct ArrayGeometry {
    std::size_t M = 32;   // antenna count
    double d = 0.075;     // element spacing [m]
    double f_c = 2.0e9;   // carrier [Hz]

    double wavelength() const { return kSpeedOfLight / f_c; }
    void validate() const;
};

/// kappa = 1 / sigma^2 with sigma given in degrees.
double sigma_to_kappa(double sigma_deg);

/// Temporal autocorrelation rho(tau) of any channel entry.
Complex acf(const AngularProfile& profile, double v, const ArrayGeometry& array, double tau);

/// acf() for one link at many delays: the normalizing I0(kappa_T) and the
/// angle term are computed once. Returns bit-identical values to acf().
class AcfEvaluator {
public:
    AcfEvaluator(const AngularProfile& profile, double v, const ArrayGeometry& array);
    Complex operator()(double tau) const;

private:
    double kappa_;
    double cos_delta_;
    double v_;
    ArrayGeometry array_;
    ScaledBesselValue den_;
};

/// Spatial correlation s(p, q) between elements p and q (0-based).
Complex scf(const AngularProfile& profile, const ArrayGeometry& array, std::size_t p, std::size_t q);

/// Space-time cross-correlation rho(tau) * s(p, q).
Complex stcc_element(const AngularProfile& profile, double v, const ArrayGeometry& array,
                     std::size_t p, std::size_t q, double tau);

/// Spatial correlation matrix R0 = R(tau = 0) with its Hermitian square root.
///
/// Immutable once built. Construction validates the PSD property through the
/// eigen-clip rule of hermitian_psd_sqrt.
class SpatialMatrix {
public:
    explicit SpatialMatrix(CMatrix entries);

    const CMatrix& entries() const { return entries_; }
    const CMatrix& sqrt() const { return sqrt_; }
    std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }

private:
    CMatrix entries_;
    CMatrix sqrt_;
};

/// R0 built from the SCF. The matrix is Hermitian Toeplitz with unit diagonal.
SpatialMatrix spatial_matrix(const AngularProfile& profile, const ArrayGeometry& array);

/// Uniform-AoA comparison model: AoA uniform on
/// [theta_c - sigma_R, theta_c + sigma_R] with the ULA fixed at alpha = pi/2,
/// s(p, q) = 1/(2 sigma_R) * integral exp(j b sin(theta)) dtheta.
/// sigma_R in radians. Evaluated by adaptive Gauss-Kronrod quadrature.
Complex legacy_scf(double theta_c, double sigma_R, const ArrayGeometry& array, std::size_t p,
                   std::size_t q);

SpatialMatrix legacy_spatial_matrix(double theta_c, double sigma_R, const ArrayGeometry& array);

/// Comparison ACF with the VUE heading fixed at gamma = 0.
Complex legacy_acf(double kappa_T, double phi_c, double v, const ArrayGeometry& array, double tau);

/// Adaptive 7/15-point Gauss-Kronrod integration of a complex integrand.
template <typename F>
Complex integrate_gk(F&& f, double lo, double hi, double abs_tol, int max_depth = 40);

} // namespace vaging

#include "vaging/detail/gauss_kronrod.hpp"
