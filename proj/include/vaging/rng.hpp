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
#include <cstdint>
#include <initializer_list>
#include <random>

#include "vaging/types.hpp"

namespace vaging {

/// Purpose tag of a random substream. Together with the integer ids of the
/// object being drawn (drop, realization, BS, VUE, ...) it names one
/// independent stream, so the same draws come out regardless of evaluation
/// order or thread count.
enum class Stream : std::uint64_t {
    Geometry = 1,
    Shadow = 2,
    Pilot = 3,
    Channel = 4,
    PilotNoise = 5,
    Innovation = 6,
    Test = 99,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Counter-style seed derivation: splitmix64 folded over (master, tag, ids...).
std::uint64_t derive_seed(std::uint64_t master, Stream tag, std::initializer_list<std::uint64_t> ids);

/// Generator family written to output metadata.
inline constexpr const char* kGeneratorFamily = "mt19937_64/splitmix64-keyed";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t master, Stream tag, std::initializer_list<std::uint64_t> ids)
        : engine_(derive_seed(master, tag, ids))
    {
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double normal() { return normal_(engine_); }
    double exponential(double mean) { return std::exponential_distribution<double>(1.0 / mean)(engine_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

    /// CN(0, 1): independent real and imaginary parts of variance 1/2.
    Complex complex_normal()
    {
        constexpr double s = 0.70710678118654752440;
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    CVector complex_normal_vector(std::size_t n)
    {
        CVector w(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < w.size(); ++i)
            w[i] = complex_normal();
        return w;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace vaging
