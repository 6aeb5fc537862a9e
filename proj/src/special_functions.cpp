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

#include "vaging/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "vaging/errors.hpp"

namespace vaging {

namespace {

// Double-double arithmetic, just enough for a complex power series.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD operator+(DD a, DD b)
{
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, double b)
{
    const double p = a.hi * b;
    const double e = std::fma(a.hi, b, -p) + a.lo * b;
    return quick_two_sum(p, e);
}

inline DD operator/(DD a, double b)
{
    const double q1 = a.hi / b;
    const double p = q1 * b;
    const double pe = std::fma(q1, b, -p);
    const double r = ((a.hi - p) - pe + a.lo) / b;
    return quick_two_sum(q1, r);
}

struct ComplexDD {
    DD re;
    DD im;
};

inline ComplexDD mul(const ComplexDD& a, Complex b)
{
    return {a.re * b.real() - a.im * b.imag(), a.re * b.imag() + a.im * b.real()};
}

inline ComplexDD add(const ComplexDD& a, const ComplexDD& b) { return {a.re + b.re, a.im + b.im}; }

ScaledBesselValue normalized(Complex mantissa, double log_scale)
{
    const double mag = std::abs(mantissa);
    if (mag == 0.0)
        return {Complex{0.0, 0.0}, 0.0};
    if (mag < 1e-2 || mag > 1e2) {
        log_scale += std::log(mag);
        mantissa /= mag;
    }
    return {mantissa, log_scale};
}

} // namespace

Complex scaled_ratio(const ScaledBesselValue& num, const ScaledBesselValue& den)
{
    if (num.mantissa == Complex{0.0, 0.0})
        return {0.0, 0.0};
    return (num.mantissa / den.mantissa) * std::exp(num.log_scale - den.log_scale);
}

namespace detail {

ScaledBesselValue i0_of_sqrt_series(Complex w)
{
    const Complex quarter = w * 0.25; // exact
    ComplexDD term{{1.0, 0.0}, {0.0, 0.0}};
    ComplexDD sum = term;
    const double peak_index = 0.5 * std::sqrt(std::abs(w));
    double max_term = 1.0;

    for (int k = 1; k < 400; ++k) {
        term = mul(term, quarter);
        const double kk = static_cast<double>(k) * static_cast<double>(k);
        term.re = term.re / kk;
        term.im = term.im / kk;
        sum = add(sum, term);

        // Squared magnitudes: terms stay below e^40 for |w| <= 400.
        const double t2 = term.re.hi * term.re.hi + term.im.hi * term.im.hi;
        const double s2 = sum.re.hi * sum.re.hi + sum.im.hi * sum.im.hi;
        max_term = std::max(max_term, t2);
        if (k > peak_index && (t2 <= 1e-36 * s2 || t2 <= 1e-68 * max_term))
            break;
    }
    return normalized({sum.re.hi + sum.re.lo, sum.im.hi + sum.im.lo}, 0.0);
}

ScaledBesselValue i0_of_sqrt_asymptotic(Complex w)
{
    // Conjugate symmetry is enforced structurally: evaluate in the closed upper
    // half plane of w and conjugate the result back.
    if (w.imag() < 0.0) {
        ScaledBesselValue r = i0_of_sqrt_asymptotic(std::conj(w));
        r.mantissa = std::conj(r.mantissa);
        return r;
    }
    if (w.imag() == 0.0)
        w.imag(0.0); // -0.0 would send sqrt to the lower half plane

    const Complex z = std::sqrt(w); // Re z >= 0, Im z >= 0
    const Complex inv_z = 1.0 / z;

    // I0(z) ~ [e^{z} sum c_k z^-k + i e^{-z} sum (-1)^k c_k z^-k] / sqrt(2 pi z),
    // c_k = ((2k-1)!!)^2 / (k! 8^k). The e^{-z} branch sits on a Stokes line
    // for real z and is dropped there (it is below e^{-2z} relative anyway).
    Complex s_plus{1.0, 0.0};
    Complex s_minus{1.0, 0.0};
    Complex power{1.0, 0.0};
    double c = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 80; ++k) {
        const double odd = 2.0 * k - 1.0;
        c *= odd * odd / (8.0 * k);
        power *= inv_z;
        const Complex t = c * power;
        const double tmag = std::abs(t);
        if (tmag > last)
            break; // past the smallest term of the divergent tail
        s_plus += t;
        s_minus += (k % 2 == 0) ? t : -t;
        last = tmag;
        if (tmag < 1e-17)
            break;
    }

    const double re = z.real();
    const double im = z.imag();
    const Complex prefactor = 1.0 / std::sqrt(kTwoPi * z);
    Complex mantissa = std::polar(1.0, im) * s_plus;
    if (im > 0.0)
        mantissa += Complex{0.0, 1.0} * std::exp(-2.0 * re) * std::polar(1.0, -im) * s_minus;
    mantissa *= prefactor;
    return normalized(mantissa, re);
}

} // namespace detail

ScaledBesselValue i0_of_sqrt(Complex w)
{
    if (std::abs(w) <= kI0SeriesSwitch)
        return detail::i0_of_sqrt_series(w);
    return detail::i0_of_sqrt_asymptotic(w);
}

double j0(double x)
{
    return i0_of_sqrt(Complex{-x * x, 0.0}).value().real();
}

CMatrix hermitian_psd_sqrt(const CMatrix& R)
{
    if (R.rows() != R.cols())
        throw DomainError("hermitian_psd_sqrt: matrix must be square");
    if (R.size() == 0)
        return R;
    const double asym = (R - R.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw DomainError("hermitian_psd_sqrt: matrix is not Hermitian");

    Eigen::SelfAdjointEigenSolver<CMatrix> eig(R);
    if (eig.info() != Eigen::Success)
        throw NumericError("hermitian_psd_sqrt: eigendecomposition failed");

    RVector lambda = eig.eigenvalues();
    const double lmax = std::max(lambda.maxCoeff(), 0.0);
    const double clip = kEigenClip * lmax;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < -clip)
            throw NotPsdError("hermitian_psd_sqrt: eigenvalue " + std::to_string(lambda[i]) +
                              " below clip threshold");
        lambda[i] = std::sqrt(std::max(lambda[i], 0.0));
    }
    const CMatrix& U = eig.eigenvectors();
    return U * lambda.asDiagonal() * U.adjoint();
}

} // namespace vaging
