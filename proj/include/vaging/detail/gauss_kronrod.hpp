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

#include <array>
#include <cmath>

namespace vaging {

namespace detail {

// 15-point Kronrod nodes on [0, 1] (symmetric half) and weights; the Gauss
// 7-point rule uses the odd-indexed nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
Complex gk15(F& f, double a, double b, double& err)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = f(center);
    Complex kronrod = fc * kKronrodWeights[7];
    Complex gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const Complex s = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * s;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * s;
    }
    err = std::abs((kronrod - gauss) * half);
    return kronrod * half;
}

template <typename F>
Complex gk_adaptive(F& f, double a, double b, double tol, int depth)
{
    double err = 0.0;
    const Complex whole = gk15(f, a, b, err);
    if (err <= tol || depth <= 0)
        return whole;
    const double mid = 0.5 * (a + b);
    return gk_adaptive(f, a, mid, 0.5 * tol, depth - 1) +
           gk_adaptive(f, mid, b, 0.5 * tol, depth - 1);
}

} // namespace detail

template <typename F>
Complex integrate_gk(F&& f, double lo, double hi, double abs_tol, int max_depth)
{
    return detail::gk_adaptive(f, lo, hi, abs_tol, max_depth);
}

} // namespace vaging
