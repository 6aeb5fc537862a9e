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

#include "vaging/channel.hpp"

#include <cmath>

#include "vaging/errors.hpp"

namespace vaging {

LargeScale path_gain(double distance, double shadow_db)
{
    if (!(distance > 0.0))
        throw DomainError("path_gain: distance must be positive");
    LargeScale ls;
    ls.distance = distance;
    ls.shadow_db = shadow_db;
    ls.gain_db = -34.53 - 38.0 * std::log10(distance) + shadow_db;
    ls.gain_linear = std::pow(10.0, ls.gain_db / 10.0);
    return ls;
}

std::vector<Complex> rho_sequence(const AngularProfile& profile, double v, const ArrayGeometry& array,
                                  double Ts, std::size_t C)
{
    std::vector<Complex> rho(C);
    for (std::size_t n = 0; n < C; ++n)
        rho[n] = acf(profile, v, array, static_cast<double>(n) * Ts);
    return rho;
}

LinkState::LinkState(LargeScale ls, AngularProfile prof, SpatialMatrix r0)
    : large_scale(ls), profile(prof), R0(std::move(r0)),
      sqrt_GR0(std::sqrt(ls.gain_linear) * R0.sqrt())
{
}

CVector draw_initial(const CMatrix& sqrt_GR0, Rng& rng)
{
    const CVector w = rng.complex_normal_vector(static_cast<std::size_t>(sqrt_GR0.cols()));
    return sqrt_GR0 * w;
}

CVector age(const CVector& h0, Complex rho_n, const CVector& z_n)
{
    const double mag2 = std::norm(rho_n);
    if (mag2 > (1.0 + 1e-12) * (1.0 + 1e-12))
        throw DomainError("age: |rho| exceeds 1");
    const double rho_bar = std::sqrt(std::max(0.0, 1.0 - mag2));
    return rho_n * h0 + rho_bar * z_n;
}

} // namespace vaging
