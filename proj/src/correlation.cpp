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

#include "vaging/correlation.hpp"

#include <cmath>
#include <string>

#include "vaging/errors.hpp"

namespace vaging {

namespace {

// I0(sqrt(x^2 - y^2 + 2 j x y cos(delta))) / I0(x): the shared shape of the
// ACF (x = kappa_T, y = a) and the SCF (x = kappa_R, y = b).
Complex von_mises_characteristic(double kappa, double y, double cos_delta, const ScaledBesselValue& den)
{
    if (y == 0.0)
        return {1.0, 0.0};
    const Complex w{kappa * kappa - y * y, 2.0 * y * kappa * cos_delta};
    return scaled_ratio(i0_of_sqrt(w), den);
}

Complex von_mises_characteristic(double kappa, double y, double cos_delta)
{
    if (y == 0.0)
        return {1.0, 0.0};
    return von_mises_characteristic(kappa, y, cos_delta, i0_of_sqrt(Complex{kappa * kappa, 0.0}));
}

double doppler_argument(double v, const ArrayGeometry& array, double tau)
{
    // a = -2 pi tau f_c v / c, sign as printed; only a^2 and a*cos enter.
    return -kTwoPi * tau * array.f_c * v / kSpeedOfLight;
}

double spatial_argument(const ArrayGeometry& array, std::size_t p, std::size_t q)
{
    const double lag = static_cast<double>(p) - static_cast<double>(q);
    return kTwoPi * lag * array.d / array.wavelength();
}

void check_index(const ArrayGeometry& array, std::size_t p, std::size_t q)
{
    if (p >= array.M || q >= array.M)
        throw IndexError("scf: element index out of range (M = " + std::to_string(array.M) + ")");
}

} // namespace

AngularProfile::AngularProfile(double kappa_T, double kappa_R, double phi_c, double theta_c,
                               double gamma, double alpha)
    : kappa_T_(kappa_T), kappa_R_(kappa_R), phi_c_(wrap_angle(phi_c)),
      theta_c_(wrap_angle(theta_c)), gamma_(wrap_angle(gamma)), alpha_(wrap_angle(alpha))
{
    if (!(kappa_T >= 0.0) || !(kappa_R >= 0.0))
        throw DomainError("AngularProfile: concentrations must be non-negative");
    if (!std::isfinite(kappa_T) || !std::isfinite(kappa_R))
        throw DomainError("AngularProfile: concentrations must be finite");
}

void ArrayGeometry::validate() const
{
    if (M < 1)
        throw ConfigError("ArrayGeometry: M must be >= 1");
    if (!(d > 0.0))
        throw ConfigError("ArrayGeometry: spacing must be positive");
    if (!(f_c > 0.0))
        throw ConfigError("ArrayGeometry: carrier frequency must be positive");
}

double sigma_to_kappa(double sigma_deg)
{
    if (!(sigma_deg > 0.0))
        throw DomainError("sigma_to_kappa: spread must be positive");
    const double s = deg2rad(sigma_deg);
    return 1.0 / (s * s);
}

Complex acf(const AngularProfile& profile, double v, const ArrayGeometry& array, double tau)
{
    const double a = doppler_argument(v, array, tau);
    return von_mises_characteristic(profile.kappa_T(), a,
                                    std::cos(profile.gamma() - profile.phi_c()));
}

AcfEvaluator::AcfEvaluator(const AngularProfile& profile, double v, const ArrayGeometry& array)
    : kappa_(profile.kappa_T()), cos_delta_(std::cos(profile.gamma() - profile.phi_c())),
      v_(v), array_(array), den_(i0_of_sqrt(Complex{kappa_ * kappa_, 0.0}))
{
}

Complex AcfEvaluator::operator()(double tau) const
{
    return von_mises_characteristic(kappa_, doppler_argument(v_, array_, tau), cos_delta_, den_);
}

Complex scf(const AngularProfile& profile, const ArrayGeometry& array, std::size_t p, std::size_t q)
{
    check_index(array, p, q);
    const double b = spatial_argument(array, p, q);
    return von_mises_characteristic(profile.kappa_R(), b,
                                    std::cos(profile.alpha() - profile.theta_c()));
}

Complex stcc_element(const AngularProfile& profile, double v, const ArrayGeometry& array,
                     std::size_t p, std::size_t q, double tau)
{
    return acf(profile, v, array, tau) * scf(profile, array, p, q);
}

SpatialMatrix::SpatialMatrix(CMatrix entries) : entries_(std::move(entries))
{
    sqrt_ = hermitian_psd_sqrt(entries_);
}

namespace {

template <typename LagFn>
CMatrix toeplitz_from_lags(std::size_t M, LagFn&& lag_value)
{
    CMatrix R(M, M);
    for (std::size_t i = 0; i < M; ++i)
        R(i, i) = 1.0;
    for (std::size_t lag = 1; lag < M; ++lag) {
        const Complex s = lag_value(lag);
        for (std::size_t q = 0; q + lag < M; ++q) {
            R(q + lag, q) = s;
            R(q, q + lag) = std::conj(s);
        }
    }
    return R;
}

} // namespace

SpatialMatrix spatial_matrix(const AngularProfile& profile, const ArrayGeometry& array)
{
    array.validate();
    return SpatialMatrix(toeplitz_from_lags(array.M, [&](std::size_t lag) {
        return scf(profile, array, lag, 0);
    }));
}

Complex legacy_scf(double theta_c, double sigma_R, const ArrayGeometry& array, std::size_t p,
                   std::size_t q)
{
    if (!(sigma_R > 0.0))
        throw DomainError("legacy_scf: sigma_R must be positive");
    check_index(array, p, q);
    const double b = spatial_argument(array, p, q);
    if (b == 0.0)
        return {1.0, 0.0};
    auto integrand = [b](double theta) { return std::polar(1.0, b * std::sin(theta)); };
    const double width = 2.0 * sigma_R;
    // Tolerance applies to the normalized value.
    const Complex integral =
        integrate_gk(integrand, theta_c - sigma_R, theta_c + sigma_R, 1e-10 * width);
    return integral / width;
}

SpatialMatrix legacy_spatial_matrix(double theta_c, double sigma_R, const ArrayGeometry& array)
{
    array.validate();
    return SpatialMatrix(toeplitz_from_lags(array.M, [&](std::size_t lag) {
        return legacy_scf(theta_c, sigma_R, array, lag, 0);
    }));
}

Complex legacy_acf(double kappa_T, double phi_c, double v, const ArrayGeometry& array, double tau)
{
    if (!(kappa_T >= 0.0))
        throw DomainError("legacy_acf: kappa_T must be non-negative");
    return von_mises_characteristic(kappa_T, doppler_argument(v, array, tau), std::cos(phi_c));
}

} // namespace vaging
