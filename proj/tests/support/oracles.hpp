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

// Test-side reference implementations. Each one takes a different route from
// the library code it checks: direct quadrature instead of closed forms,
// explicit sums instead of batched algebra, sampling instead of analysis.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

constexpr double kPi = 3.14159265358979323846;

/// Composite trapezoid of a 2 pi periodic integrand over [-pi, pi) with n
/// nodes, divided by 2 pi. Spectrally accurate for smooth integrands.
inline Complex periodic_mean(const std::function<Complex(double)>& f, std::size_t n)
{
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += f(-kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n));
    return acc / static_cast<double>(n);
}

/// E[exp(j x cos(theta - mu_rel))] for theta ~ von Mises(0, kappa), with the
/// pdf weight exp(kappa (cos - 1)) normalized by its own trapezoid sum.
///
/// This is the ACF integral with x = a, mu_rel = gamma - phi_c, and the SCF
/// integral with x = b, mu_rel = alpha - theta_c.
inline Complex von_mises_mean_exp(double kappa, double rel_angle, double x, std::size_t n = 1u << 14)
{
    Complex acc{0.0, 0.0};
    double wsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double th = -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        const double w = std::exp(kappa * (std::cos(th) - 1.0));
        acc += w * std::polar(1.0, x * std::cos(th - rel_angle));
        wsum += w;
    }
    return acc / wsum;
}

/// I0(kappa) for real kappa >= 0 from (1/2pi) int exp(kappa cos x) dx.
inline double bessel_i0_quad(double kappa, std::size_t n = 1u << 14)
{
    return periodic_mean([&](double x) { return Complex{std::exp(kappa * std::cos(x)), 0.0}; }, n).real();
}

/// J0(x) = (1/2pi) int cos(x sin t) dt.
inline double bessel_j0_quad(double x, std::size_t n = 1u << 14)
{
    return periodic_mean([&](double t) { return Complex{std::cos(x * std::sin(t)), 0.0}; }, n).real();
}

/// Root of f in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 100)
{
    double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Simpson rule on [lo, hi] with n (even) panels.
inline Complex simpson(const std::function<Complex(double)>& f, double lo, double hi, std::size_t n)
{
    if (n % 2)
        ++n;
    const double h = (hi - lo) / static_cast<double>(n);
    Complex acc = f(lo) + f(hi);
    for (std::size_t i = 1; i < n; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * f(lo + h * static_cast<double>(i));
    return acc * h / 3.0;
}

/// Best-Fisher rejection sampler for the von Mises distribution around 0.
class VonMisesSampler {
public:
    explicit VonMisesSampler(double kappa) : kappa_(kappa)
    {
        const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
        const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
        r_ = (1.0 + rho * rho) / (2.0 * rho);
    }

    template <typename Engine>
    double operator()(Engine& eng)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        if (kappa_ < 1e-8)
            return kPi * (2.0 * u(eng) - 1.0);
        for (;;) {
            const double z = std::cos(kPi * u(eng));
            const double f = (1.0 + r_ * z) / (r_ + z);
            const double c = kappa_ * (r_ - f);
            const double u2 = u(eng);
            if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
                const double th = std::acos(std::min(1.0, std::max(-1.0, f)));
                return u(eng) < 0.5 ? -th : th;
            }
        }
    }

private:
    double kappa_;
    double r_ = 1.0;
};

/// Sample covariance (1/N) sum x x^H of the columns of X.
inline CMatrix sample_covariance(const CMatrix& X)
{
    return (X * X.adjoint()) / static_cast<double>(X.cols());
}

inline double frobenius_relative(const CMatrix& A, const CMatrix& ref)
{
    return (A - ref).norm() / ref.norm();
}

/// Random Hermitian PSD matrix with unit diagonal (a correlation matrix).
template <typename Engine>
CMatrix random_correlation(Eigen::Index M, Eigen::Index rank, Engine& eng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix B(M, rank);
    for (Eigen::Index i = 0; i < M; ++i)
        for (Eigen::Index j = 0; j < rank; ++j)
            B(i, j) = Complex{n(eng), n(eng)};
    CMatrix R = B * B.adjoint();
    const Eigen::VectorXd d = R.diagonal().real().cwiseSqrt().cwiseInverse();
    R = d.asDiagonal() * R * d.asDiagonal();
    return 0.5 * (R + R.adjoint());
}

template <typename Engine>
CVector random_complex_vector(Eigen::Index n, Engine& eng)
{
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v[i] = Complex{g(eng), g(eng)};
    return v;
}

/// Effective SINR with every aging coefficient equal to one, assembled from
/// its definition term by term: the error covariance of each link is
/// G R0 - Phi, the signal is P |v^H h_k|^2 and the interference runs over the
/// other users' estimates.
inline double sinr_without_aging(std::size_t k, const CVector& v, const std::vector<CVector>& h_hat,
                                 const std::vector<double>& power, const std::vector<CMatrix>& GR0,
                                 const std::vector<CMatrix>& Phi, double noise_var)
{
    double signal = 0.0;
    double interference = 0.0;
    Complex noise = noise_var * v.squaredNorm();
    for (std::size_t j = 0; j < h_hat.size(); ++j) {
        Complex inner{0.0, 0.0};
        for (Eigen::Index m = 0; m < v.size(); ++m)
            inner += std::conj(v[m]) * h_hat[j][m];
        const double term = power[j] * std::norm(inner);
        if (j == k)
            signal = term;
        else
            interference += term;
        const CMatrix Q = GR0[j] - Phi[j];
        for (Eigen::Index a = 0; a < v.size(); ++a)
            for (Eigen::Index b = 0; b < v.size(); ++b)
                noise += power[j] * std::conj(v[a]) * Q(a, b) * v[b];
    }
    return signal / (interference + noise.real());
}

} // namespace oracle
