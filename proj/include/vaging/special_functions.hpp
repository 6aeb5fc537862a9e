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

#include "vaging/types.hpp"

namespace vaging {

/// A complex value stored as mantissa * exp(log_scale).
///
/// I0 of the arguments in the correlation closed forms reaches e^131 and
/// beyond, while the quantities of interest are ratios of order one. Values
/// are normalized so that |mantissa| lies in [1e-2, 1e2] whenever the value is
/// nonzero; ratios subtract log scales and never materialize the raw magnitude.
struct ScaledBesselValue {
    Complex mantissa{1.0, 0.0};
    double log_scale = 0.0;

    Complex value() const { return mantissa * std::exp(log_scale); }
};

/// num / den, evaluated in scaled form.
Complex scaled_ratio(const ScaledBesselValue& num, const ScaledBesselValue& den);

/// Argument magnitude |w| at which i0_of_sqrt switches from the power series in
/// w to the large-argument expansion of I0(sqrt(w)).
inline constexpr double kI0SeriesSwitch = 400.0;

/// I0(sqrt(w)) for finite complex w.
///
/// I0 is even, so I0(sqrt(w)) is an entire function of w and no branch choice
/// leaks into the result. For |w| <= kI0SeriesSwitch the series
/// sum_k (w/4)^k / (k!)^2 is summed in double-double arithmetic (the negative
/// real axis cancels ~8 digits there); beyond it the two-branch asymptotic
/// expansion of I0(z), z = principal sqrt(w), is used.
ScaledBesselValue i0_of_sqrt(Complex w);

/// Bessel J0 on the real axis, as I0(sqrt(-x^2)).
double j0(double x);

namespace detail {
ScaledBesselValue i0_of_sqrt_series(Complex w);
ScaledBesselValue i0_of_sqrt_asymptotic(Complex w);
} // namespace detail

/// Hermitian PSD square root S = U diag(sqrt(l)) U^H, so that S S^H = R.
///
/// R must be Hermitian to 1e-10 (largest |R - R^H| entry). Eigenvalues in
/// [-1e-12 * l_max, 0) are clipped to zero; anything more negative throws
/// NotPsdError.
CMatrix hermitian_psd_sqrt(const CMatrix& R);

/// Relative clip threshold applied to eigenvalues of correlation matrices.
inline constexpr double kEigenClip = 1e-12;

} // namespace vaging
