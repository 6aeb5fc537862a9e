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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vaging/channel.hpp"
#include "vaging/errors.hpp"
#include "vaging/training.hpp"

using namespace vaging;

namespace {

// K users, all on pilot 0 unless `pilots` says otherwise.
PilotAssignment manual_pilots(const std::vector<std::size_t>& pilot_of, std::size_t T)
{
    PilotAssignment a;
    a.pilot_of = pilot_of;
    a.cohort_of.assign(T, {});
    for (std::size_t k = 0; k < pilot_of.size(); ++k)
        a.cohort_of[pilot_of[k]].push_back(k);
    return a;
}

CellStatistics random_stats(std::size_t K, Eigen::Index M, std::mt19937_64& eng, double noise_var = 1.0)
{
    std::uniform_real_distribution<double> g(0.2, 3.0);
    CellStatistics s;
    s.T = 4;
    s.noise_var = noise_var;
    for (std::size_t k = 0; k < K; ++k) {
        s.gain.push_back(g(eng));
        s.power.push_back(g(eng));
        s.R0.push_back(oracle::random_correlation(M, M, eng));
    }
    return s;
}

// True channels, processed pilots and estimates for N independent draws.
struct Draws {
    std::vector<CMatrix> h;     // per user, M x N
    std::vector<CMatrix> h_hat; // per user, M x N
};

Draws simulate(const CellStatistics& s, const PilotAssignment& pa, int N, std::uint64_t seed)
{
    const auto M = static_cast<Eigen::Index>(s.antennas());
    const std::size_t K = s.users();
    std::vector<CMatrix> sq;
    for (std::size_t k = 0; k < K; ++k)
        sq.push_back(std::sqrt(s.gain[k]) * hermitian_psd_sqrt(s.R0[k]));
    const CellEstimator est(s, pa);
    Draws d;
    d.h.assign(K, CMatrix(M, N));
    d.h_hat.assign(K, CMatrix(M, N));
    Rng rng(seed);
    for (int i = 0; i < N; ++i) {
        CMatrix H0(M, static_cast<Eigen::Index>(K));
        for (std::size_t k = 0; k < K; ++k)
            H0.col(static_cast<Eigen::Index>(k)) = draw_initial(sq[k], rng);
        const CMatrix Y = receive_pilots(s, H0, pa, rng);
        const CMatrix Hh = est.estimate_all(s, Y);
        for (std::size_t k = 0; k < K; ++k) {
            d.h[k].col(i) = H0.col(static_cast<Eigen::Index>(k));
            d.h_hat[k].col(i) = Hh.col(static_cast<Eigen::Index>(k));
        }
    }
    return d;
}

} // namespace

TEST_CASE("assign_pilots: singleton and binomial cohort size")
{
    Rng rng(1);
    const auto one = assign_pilots(1, 40, rng);
    CHECK(one.cohort(0).size() == 1);

    // Pilot 0 carries Binomial(K, 1/T) users; the cohort seen by user 0
    // always holds user 0 itself plus Binomial(K - 1, 1/T) others.
    double mean_pilot = 0.0;
    double mean_cohort = 0.0;
    const int seeds = 1000;
    for (int s = 0; s < seeds; ++s) {
        Rng r(static_cast<std::uint64_t>(s), Stream::Test, {7});
        const auto a = assign_pilots(360, 40, r);
        mean_pilot += static_cast<double>(a.cohort_of[0].size());
        mean_cohort += static_cast<double>(a.cohort(0).size());
        std::size_t total = 0;
        for (const auto& c : a.cohort_of)
            total += c.size();
        REQUIRE(total == 360);
    }
    CHECK(std::abs(mean_pilot / seeds - 9.0) <= 0.05 * 9.0);
    const double biased = 1.0 + 359.0 / 40.0;
    CHECK(std::abs(mean_cohort / seeds - biased) <= 0.05 * biased);

    // Collisions happen even when pilots outnumber users.
    bool collided = false;
    for (int s = 0; s < 50 && !collided; ++s) {
        Rng r(static_cast<std::uint64_t>(s));
        const auto a = assign_pilots(10, 40, r);
        for (const auto& c : a.cohort_of)
            collided = collided || c.size() > 1;
    }
    CHECK(collided);
    CHECK_THROWS_AS(assign_pilots(0, 4, rng), ConfigError);
}

TEST_CASE("receive_pilots without noise is the weighted cohort sum")
{
    std::mt19937_64 eng(1);
    CellStatistics s = random_stats(2, 3, eng, 0.0);
    const auto pa = manual_pilots({0, 0}, 2);
    CMatrix H0(3, 2);
    H0.col(0) = oracle::random_complex_vector(3, eng);
    H0.col(1) = oracle::random_complex_vector(3, eng);
    Rng rng(2);
    const CMatrix Y = receive_pilots(s, H0, pa, rng);
    const double T = static_cast<double>(s.T);
    const CVector expect = std::sqrt(s.power[0] * T) * H0.col(0) + std::sqrt(s.power[1] * T) * H0.col(1);
    CHECK((Y.col(0) - expect).norm() < 1e-14);
    CHECK(Y.col(1).norm() == 0.0);

    const auto single = manual_pilots({0}, 1);
    CellStatistics s1 = random_stats(1, 3, eng, 0.0);
    const CMatrix Y1 = receive_pilots(s1, H0.leftCols(1), single, rng);
    CHECK((Y1.col(0) - std::sqrt(s1.power[0] * T) * H0.col(0)).norm() < 1e-14);
}

TEST_CASE("processed pilot covariance matches Psi")
{
    std::mt19937_64 eng(3);
    const CellStatistics s = random_stats(3, 4, eng, 0.5);
    const auto pa = manual_pilots({0, 0, 0}, 1);
    std::vector<CMatrix> sq;
    for (std::size_t k = 0; k < 3; ++k)
        sq.push_back(std::sqrt(s.gain[k]) * hermitian_psd_sqrt(s.R0[k]));
    Rng rng(4);
    const int N = 10000;
    CMatrix Ys(4, N);
    for (int i = 0; i < N; ++i) {
        CMatrix H0(4, 3);
        for (std::size_t k = 0; k < 3; ++k)
            H0.col(static_cast<Eigen::Index>(k)) = draw_initial(sq[k], rng);
        Ys.col(i) = receive_pilots(s, H0, pa, rng).col(0);
    }
    const std::vector<std::size_t> cohort{0, 1, 2};
    CHECK(oracle::frobenius_relative(oracle::sample_covariance(Ys), pilot_covariance(s, cohort)) <= 0.05);
}

TEST_CASE("mmse_estimate limits")
{
    std::mt19937_64 eng(5);
    SECTION("noise free singleton recovers the channel")
    {
        const CellStatistics s = random_stats(1, 4, eng, 0.0);
        const auto pa = manual_pilots({0}, 1);
        const CVector h = oracle::random_complex_vector(4, eng);
        const CVector y = std::sqrt(s.power[0] * s.T) * h;
        const Estimate e = mmse_estimate(0, y, s, pa);
        CHECK((e.h_hat - h).norm() <= 1e-6 * h.norm());
        CHECK(oracle::frobenius_relative(e.Phi, s.gain[0] * s.R0[0]) <= 1e-6);
    }
    SECTION("zero power gives a zero estimate")
    {
        CellStatistics s = random_stats(1, 4, eng, 1.0);
        s.power[0] = 0.0;
        const auto pa = manual_pilots({0}, 1);
        const Estimate e = mmse_estimate(0, oracle::random_complex_vector(4, eng), s, pa);
        CHECK(e.h_hat.norm() == 0.0);
        CHECK(e.Phi.norm() == 0.0);
    }
}

TEST_CASE("batched estimator agrees with the per-user estimate")
{
    std::mt19937_64 eng(6);
    const CellStatistics s = random_stats(5, 4, eng, 0.3);
    const auto pa = manual_pilots({0, 1, 0, 2, 1}, 3);
    CMatrix Y(4, 3);
    for (Eigen::Index t = 0; t < 3; ++t)
        Y.col(t) = oracle::random_complex_vector(4, eng);
    const CellEstimator est(s, pa);
    const CMatrix H = est.estimate_all(s, Y);
    for (std::size_t k = 0; k < 5; ++k) {
        const Estimate e = mmse_estimate(k, Y.col(static_cast<Eigen::Index>(pa.pilot_of[k])), s, pa);
        CHECK((H.col(static_cast<Eigen::Index>(k)) - e.h_hat).norm() <= 1e-12 * e.h_hat.norm());
        CHECK(oracle::frobenius_relative(est.phi(k), e.Phi) <= 1e-12);
    }
}

TEST_CASE("estimate covariance, orthogonality and ordering")
{
    std::mt19937_64 eng(7);
    const CellStatistics s = random_stats(3, 4, eng, 0.8);
    const auto pa = manual_pilots({0, 0, 0}, 1);
    const int N = 10000;
    const Draws d = simulate(s, pa, N, 8);
    const CellEstimator est(s, pa);
    for (std::size_t k = 0; k < 3; ++k) {
        INFO("user " << k);
        CHECK(oracle::frobenius_relative(oracle::sample_covariance(d.h_hat[k]), est.phi(k)) <= 0.05);

        const CMatrix err = d.h[k] - d.h_hat[k];
        const CMatrix cross = (d.h_hat[k] * err.adjoint()) / static_cast<double>(N);
        const double scale = (s.gain[k] * s.R0[k]).cwiseAbs().maxCoeff();
        CHECK(cross.cwiseAbs().maxCoeff() <= 0.05 * scale);

        const Eigen::SelfAdjointEigenSolver<CMatrix> eig(s.gain[k] * s.R0[k] - est.phi(k));
        CHECK(eig.eigenvalues().minCoeff() >= -1e-12 * s.gain[k] * static_cast<double>(s.antennas()));
    }
}

TEST_CASE("error covariance Q(n) is PSD and its trace grows with aging")
{
    std::mt19937_64 eng(9);
    const CellStatistics s = random_stats(2, 4, eng, 0.5);
    const auto pa = manual_pilots({0, 0}, 1);
    const Estimate e = mmse_estimate(0, oracle::random_complex_vector(4, eng), s, pa);
    double last = -1.0;
    for (double r : {1.0, 0.9, 0.6, 0.3, 0.0}) {
        const CMatrix Q = e.Q(Complex{r, 0.0});
        const Eigen::SelfAdjointEigenSolver<CMatrix> eig(Q);
        CHECK(eig.eigenvalues().minCoeff() >= -1e-12 * Q.norm());
        const double tr = Q.trace().real();
        CHECK(tr >= last);
        last = tr;
    }
}

TEST_CASE("nmse limits and the no-contamination bound")
{
    std::mt19937_64 eng(10);
    SECTION("rho = 0 gives one")
    {
        const CellStatistics s = random_stats(2, 4, eng);
        CHECK(nmse(0, 0.0, s, manual_pilots({0, 0}, 1)) == 1.0);
    }
    SECTION("high SNR singleton approaches zero")
    {
        CellStatistics s = random_stats(1, 4, eng, 1e-12);
        CHECK(nmse(0, 1.0, s, manual_pilots({0}, 1)) < 1e-6);
    }
    SECTION("zeta = 0 bound is one")
    {
        const std::vector<double> l{1.0, 2.0, 1.0};
        CHECK(nmse_npc_bound(1.0, 0.0, l) == 1.0);
    }
    SECTION("singleton cohort attains the bound")
    {
        const CellStatistics s = random_stats(1, 6, eng, 0.7);
        const Complex r{0.8, 0.1};
        CHECK(std::abs(nmse(0, r, s, manual_pilots({0}, 1)) - nmse_npc_bound(r, s.zeta(0), s.R0[0])) <= 1e-10);
    }
    SECTION("orthogonal supports attain the bound, shared support exceeds it")
    {
        CellStatistics s;
        s.T = 4;
        s.noise_var = 0.5;
        s.gain = {1.0, 1.0};
        s.power = {1.0, 1.0};
        CMatrix A = CMatrix::Zero(4, 4);
        CMatrix B = CMatrix::Zero(4, 4);
        A.topLeftCorner(2, 2) = oracle::random_correlation(2, 2, eng) * 2.0;
        B.bottomRightCorner(2, 2) = oracle::random_correlation(2, 2, eng) * 2.0;
        s.R0 = {A, B};
        const auto pa = manual_pilots({0, 0}, 1);
        const double bound = nmse_npc_bound(1.0, s.zeta(0), A);
        CHECK(std::abs(nmse(0, 1.0, s, pa) - bound) <= 1e-10);
        s.R0 = {A, A};
        CHECK(nmse(0, 1.0, s, pa) > bound + 1e-6);
    }
    SECTION("flat spectrum maximizes, rank one minimizes the bound")
    {
        const std::size_t M = 6;
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double zeta = 3.0;
        const std::vector<double> flat(M, 1.0);
        std::vector<double> spike(M, 0.0);
        spike[0] = static_cast<double>(M);
        const double hi = nmse_npc_bound(1.0, zeta, flat);
        const double lo = nmse_npc_bound(1.0, zeta, spike);
        for (int i = 0; i < 100; ++i) {
            std::vector<double> l(M);
            double sum = 0.0;
            for (auto& x : l) {
                x = u(eng);
                sum += x;
            }
            for (auto& x : l)
                x *= static_cast<double>(M) / sum;
            const double b = nmse_npc_bound(1.0, zeta, l);
            CHECK(b <= hi + 1e-12);
            CHECK(b >= lo - 1e-12);
        }
    }
}
