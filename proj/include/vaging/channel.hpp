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
#include <vector>

#include "vaging/correlation.hpp"
#include "vaging/rng.hpp"
#include "vaging/types.hpp"

namespace vaging {

/// Large-scale fading of one link: G[dB] = -34.53 - 38 log10(D) + X.
struct LargeScale {
    double distance = 1.0;  // 3D distance [m]
    double shadow_db = 0.0; // shadow fading draw X [dB]
    double gain_db = 0.0;
    double gain_linear = 1.0;
};

LargeScale path_gain(double distance, double shadow_db);

/// rho[n] = acf(n Ts) for n = 0..C-1.
std::vector<Complex> rho_sequence(const AngularProfile& profile, double v, const ArrayGeometry& array,
                                  double Ts, std::size_t C);

/// Everything that is fixed about a link within one transmission block.
struct LinkState {
    LargeScale large_scale;
    AngularProfile profile;
    SpatialMatrix R0;
    CMatrix sqrt_GR0; // sqrt(G) * R0^{1/2}
    CVector h0;
    std::vector<Complex> rho;

    LinkState(LargeScale ls, AngularProfile prof, SpatialMatrix r0);
};

/// h[0] = (G R0)^{1/2} w with w ~ CN(0, I_M).
CVector draw_initial(const CMatrix& sqrt_GR0, Rng& rng);

/// h[n] = rho[n] h[0] + sqrt(1 - |rho[n]|^2) z[n].
CVector age(const CVector& h0, Complex rho_n, const CVector& z_n);

} // namespace vaging
