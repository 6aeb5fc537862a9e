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

// Acceptance driver: one PASS/FAIL line per criterion.
//
// usage: vaging_acceptance <vaging-cli> <acceptance-config-dir> <work-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "vaging/channel.hpp"
#include "vaging/correlation.hpp"
#include "vaging/receiver.hpp"
#include "vaging/sweep.hpp"
#include "vaging/training.hpp"

using namespace vaging;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Paths {
    std::string cli;
    fs::path configs;
    fs::path work;
};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool run(const std::string& cmd, const fs::path& log)
{
    const std::string full = cmd + " >>'" + log.string() + "' 2>&1";
    return std::system(full.c_str()) == 0;
}

ArrayGeometry half_wave(std::size_t M)
{
    ArrayGeometry a;
    a.M = M;
    a.d = 0.5 * a.wavelength();
    return a;
}

// Closed-form ACF and SCF against trapezoid quadrature of the von Mises
// integrals, on 5 spreads x 5 relative angles x 5 arguments per factor.
Outcome c1_closed_form(const Paths&)
{
    const double kappas[] = {0.0, 2.68, 14.59, 50.0, 131.0};
    const double angles_deg[] = {0.0, 30.0, 60.0, 90.0, 135.0};
    const double v = 33.33;
    double worst = 0.0;
    double worst_oracle = 0.0;
    for (double kappa : kappas)
        for (double ang : angles_deg) {
            const double rel = deg2rad(ang);
            for (int i = 0; i < 5; ++i) {
                // ACF factor, |a| in [0, 10]; the oracle takes the signed argument.
                {
                    ArrayGeometry arr = half_wave(2);
                    const double a = 10.0 * i / 4.0;
                    const double tau = a * kSpeedOfLight / (2.0 * kPi * arr.f_c * v);
                    const AngularProfile p(kappa, 0.0, 0.0, 0.0, rel, 0.0);
                    const Complex ref = oracle::von_mises_mean_exp(kappa, rel, -a);
                    worst_oracle = std::max(worst_oracle,
                                            std::abs(ref - oracle::von_mises_mean_exp(kappa, rel, -a, 1u << 15)));
                    worst = std::max(worst, std::abs(acf(p, v, arr, tau) - ref));
                }
                // SCF factor, b in [0, 320] on adjacent elements.
                {
                    const double b = 320.0 * i / 4.0;
                    ArrayGeometry arr = half_wave(2);
                    const AngularProfile p(0.0, kappa, 0.0, 0.0, 0.0, rel);
                    Complex got{1.0, 0.0};
                    if (b > 0.0) {
                        arr.d = b * arr.wavelength() / (2.0 * kPi);
                        got = scf(p, arr, 1, 0);
                    } else {
                        got = scf(p, arr, 0, 0);
                    }
                    const Complex ref = oracle::von_mises_mean_exp(kappa, rel, b);
                    worst_oracle = std::max(worst_oracle,
                                            std::abs(ref - oracle::von_mises_mean_exp(kappa, rel, b, 1u << 15)));
                    worst = std::max(worst, std::abs(got - ref));
                }
            }
        }
    Outcome o;
    o.pass = worst <= 1e-8 && worst_oracle <= 1e-10;
    o.detail = "max |err| " + fmt(worst) + " (tol 1e-8), oracle self-check " + fmt(worst_oracle);
    return o;
}

Outcome c2_isotropic(const Paths&)
{
    const ArrayGeometry arr = half_wave(100);
    const double v = 33.33;
    double worst_t = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double tau = 5e-5 * i;
        const AngularProfile p(0.0, 14.59, 0.1 * i, 0.3, -0.07 * i, 1.0);
        const double x = 2.0 * kPi * tau * arr.f_c * v / kSpeedOfLight;
        worst_t = std::max(worst_t, std::abs(acf(p, v, arr, tau) - oracle::bessel_j0_quad(x)));
    }
    double worst_s = 0.0;
    const AngularProfile p(2.68, 0.0, 0.4, -1.1, 0.0, 0.6);
    for (std::size_t lag = 0; lag < 100; ++lag) {
        const double b = 2.0 * kPi * static_cast<double>(lag) * arr.d / arr.wavelength();
        worst_s = std::max(worst_s, std::abs(scf(p, arr, lag, 0) - oracle::bessel_j0_quad(b)));
    }
    Outcome o;
    o.pass = worst_t <= 1e-8 && worst_s <= 1e-8;
    o.detail = "acf " + fmt(worst_t) + ", scf " + fmt(worst_s) + " (tol 1e-8)";
    return o;
}

Outcome c3_sigma_kappa(const Paths&)
{
    const double k35 = sigma_to_kappa(35.0);
    const double k15 = sigma_to_kappa(15.0);
    const double k5 = sigma_to_kappa(5.0);
    Outcome o;
    o.pass = std::abs(k35 - 2.68) <= 0.01 && std::abs(k15 - 14.59) <= 0.01 && std::abs(k5 - 131.0) <= 1.0;
    o.detail = "35 -> " + fmt(k35) + ", 15 -> " + fmt(k15) + ", 5 -> " + fmt(k5);
    return o;
}

Outcome c4_coherence(const Paths&)
{
    const std::size_t a = coherence_block(33.33, 2e9, 1e-5);
    const std::size_t b = coherence_block(16.67, 2e9, 1e-5);
    Outcome o;
    o.pass = a == 113 && b == 225;
    o.detail = "C_v(33.33) = " + std::to_string(a) + ", C_v(16.67) = " + std::to_string(b);
    return o;
}

// Channel, aging and estimate statistics on a contaminated three-user cell.
Outcome c5_distributions(const Paths&)
{
    const std::size_t K = 3;
    const ArrayGeometry arr = half_wave(4);
    const AngularProfile profiles[] = {
        {2.68, 14.59, 0.3, 0.3 + kPi, 0.0, 0.0},
        {2.68, 2.68, -1.2, -1.2 + kPi, kPi, 0.0},
        {14.59, 14.59, 2.0, 2.0 - kPi, 0.0, 0.0},
    };
    const double gains_db[] = {0.0, -3.0, 3.0};
    std::vector<LinkState> links;
    CellStatistics stats;
    stats.T = 2;
    stats.noise_var = 0.05;
    for (std::size_t k = 0; k < K; ++k) {
        LargeScale ls;
        ls.gain_db = gains_db[k];
        ls.gain_linear = std::pow(10.0, ls.gain_db / 10.0);
        links.emplace_back(ls, profiles[k], spatial_matrix(profiles[k], arr));
        stats.gain.push_back(ls.gain_linear);
        stats.R0.push_back(links.back().R0.entries());
        stats.power.push_back(0.1);
    }
    PilotAssignment pilots;
    pilots.pilot_of = {0, 0, 1};
    pilots.cohort_of = {{0, 1}, {2}};
    const CellEstimator est(stats, pilots);

    const int N = 10000;
    const std::size_t n = 200;
    std::vector<CMatrix> h0(K, CMatrix(4, N)), hn(K, CMatrix(4, N)), hh(K, CMatrix(4, N));
    Rng rng(2024);
    for (int i = 0; i < N; ++i) {
        CMatrix H0(4, static_cast<Eigen::Index>(K));
        for (std::size_t k = 0; k < K; ++k) {
            H0.col(static_cast<Eigen::Index>(k)) = draw_initial(links[k].sqrt_GR0, rng);
            const Complex rho = acf(profiles[k], 33.33, arr, static_cast<double>(n) * 1e-5);
            hn[k].col(i) = age(H0.col(static_cast<Eigen::Index>(k)), rho, draw_initial(links[k].sqrt_GR0, rng));
            h0[k].col(i) = H0.col(static_cast<Eigen::Index>(k));
        }
        const CMatrix Y = receive_pilots(stats, H0, pilots, rng);
        const CMatrix Hhat = est.estimate_all(stats, Y);
        for (std::size_t k = 0; k < K; ++k)
            hh[k].col(i) = Hhat.col(static_cast<Eigen::Index>(k));
    }
    double w0 = 0.0, wn = 0.0, wphi = 0.0, worth = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const CMatrix GR0 = stats.gain[k] * stats.R0[k];
        w0 = std::max(w0, oracle::frobenius_relative(oracle::sample_covariance(h0[k]), GR0));
        wn = std::max(wn, oracle::frobenius_relative(oracle::sample_covariance(hn[k]), GR0));
        wphi = std::max(wphi, oracle::frobenius_relative(oracle::sample_covariance(hh[k]), est.phi(k)));
        // E{e h_hat^H} relative to sqrt(E||e||^2 E||h_hat||^2).
        const CMatrix err = h0[k] - hh[k];
        const CMatrix cross = err * hh[k].adjoint() / static_cast<double>(N);
        const double scale = std::sqrt(err.squaredNorm() * hh[k].squaredNorm()) / static_cast<double>(N);
        worth = std::max(worth, cross.norm() / scale);
    }
    Outcome o;
    o.pass = w0 <= 0.05 && wn <= 0.05 && wphi <= 0.05 && worth <= 0.05;
    o.detail = "h[0] " + fmt(w0) + ", h[n] " + fmt(wn) + ", h_hat " + fmt(wphi) + ", orthogonality " + fmt(worth) +
               " (tol 0.05)";
    return o;
}

struct Scene {
    CellStatistics stats;
    std::vector<CMatrix> phi;
    CMatrix H;
};

Scene random_scene(std::size_t K, Eigen::Index M, std::size_t T, std::mt19937_64& eng)
{
    std::uniform_real_distribution<double> u(0.3, 2.0);
    std::uniform_int_distribution<std::size_t> pick(0, T - 1);
    Scene s;
    s.stats.T = 4;
    s.stats.noise_var = u(eng) * 0.2;
    for (std::size_t k = 0; k < K; ++k) {
        s.stats.gain.push_back(u(eng));
        s.stats.power.push_back(u(eng));
        std::uniform_int_distribution<Eigen::Index> rank(1, M);
        s.stats.R0.push_back(oracle::random_correlation(M, rank(eng), eng));
    }
    PilotAssignment pa;
    pa.cohort_of.assign(T, {});
    for (std::size_t k = 0; k < K; ++k) {
        pa.pilot_of.push_back(pick(eng));
        pa.cohort_of[pa.pilot_of.back()].push_back(k);
    }
    const CellEstimator est(s.stats, pa);
    s.phi = est.phi();
    CMatrix Y(M, static_cast<Eigen::Index>(T));
    for (Eigen::Index t = 0; t < Y.cols(); ++t)
        Y.col(t) = 2.0 * oracle::random_complex_vector(M, eng);
    s.H = est.estimate_all(s.stats, Y);
    return s;
}

std::vector<Complex> random_rho(std::size_t K, std::mt19937_64& eng)
{
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    std::uniform_real_distribution<double> ph(-kPi, kPi);
    std::vector<Complex> r(K);
    for (auto& x : r)
        x = std::polar(mag(eng), ph(eng));
    return r;
}

Outcome c6_optimality(const Paths&)
{
    std::mt19937_64 eng(6);
    double worst_gap = 0.0; // max (MR - MMSE) / max(1, MR)
    for (int i = 0; i < 1000; ++i) {
        const Scene s = random_scene(5, 8, 3, eng);
        const auto rho = random_rho(5, eng);
        const CMatrix E = error_covariance(s.stats, s.phi, rho);
        const SymbolContext ctx{1, rho, s.stats.power, s.H, E};
        const std::size_t k = static_cast<std::size_t>(i) % 5;
        const double mr = sinr(k, combiner(Combiner::MR, k, ctx), ctx);
        const double mm = sinr(k, combiner(Combiner::MMSE, k, ctx), ctx);
        worst_gap = std::max(worst_gap, (mr - mm) / std::max(1.0, mr));
    }

    double worst_search = -1e300; // max (best random - MMSE) / MMSE
    for (int inst = 0; inst < 3; ++inst) {
        const Scene s = random_scene(3, 8, 2, eng);
        const auto rho = random_rho(3, eng);
        const CMatrix E = error_covariance(s.stats, s.phi, rho);
        const SymbolContext ctx{1, rho, s.stats.power, s.H, E};
        const double mm = sinr(0, mmse_combiner(0, ctx), ctx);
        double best = 0.0;
        for (int j = 0; j < 100000; ++j)
            best = std::max(best, sinr(0, oracle::random_complex_vector(8, eng), ctx));
        worst_search = std::max(worst_search, (best - mm) / mm);
    }

    double worst_scale = 0.0;
    {
        const Scene s = random_scene(4, 8, 2, eng);
        const auto rho = random_rho(4, eng);
        const CMatrix E = error_covariance(s.stats, s.phi, rho);
        const SymbolContext ctx{1, rho, s.stats.power, s.H, E};
        std::uniform_real_distribution<double> lg(-3.0, 3.0);
        std::uniform_real_distribution<double> ph(-kPi, kPi);
        for (int j = 0; j < 1000; ++j) {
            const CVector v = oracle::random_complex_vector(8, eng);
            const Complex c = std::polar(std::pow(10.0, lg(eng)), ph(eng));
            const double a = sinr(1, v, ctx);
            worst_scale = std::max(worst_scale, std::abs(sinr(1, c * v, ctx) - a) / a);
        }
    }
    Outcome o;
    o.pass = worst_gap <= 1e-12 && worst_search <= 0.0 && worst_scale <= 1e-10;
    o.detail = "MR - MMSE " + fmt(worst_gap) + " (tol 1e-12), random search margin " + fmt(worst_search) +
               ", scale " + fmt(worst_scale) + " (tol 1e-10)";
    return o;
}

Outcome c7_nmse_bound(const Paths&)
{
    std::mt19937_64 eng(7);
    std::uniform_int_distribution<std::size_t> pick_k(2, 6);
    std::uniform_int_distribution<Eigen::Index> pick_m(2, 8);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    double worst_gap = 0.0;    // max (bound - nmse)
    double worst_equal = 0.0;  // max |nmse - bound| for users alone on their pilot
    std::size_t n_alone = 0;
    auto check = [&](std::size_t K, Eigen::Index M, std::size_t T, bool distinct) {
        CellStatistics s;
        s.T = T;
        s.noise_var = u(eng);
        for (std::size_t k = 0; k < K; ++k) {
            s.gain.push_back(u(eng));
            s.power.push_back(u(eng));
            std::uniform_int_distribution<Eigen::Index> rank(1, M);
            s.R0.push_back(oracle::random_correlation(M, rank(eng), eng));
        }
        PilotAssignment pa;
        pa.cohort_of.assign(T, {});
        std::uniform_int_distribution<std::size_t> pick(0, T - 1);
        for (std::size_t k = 0; k < K; ++k) {
            pa.pilot_of.push_back(distinct ? k : pick(eng));
            pa.cohort_of[pa.pilot_of.back()].push_back(k);
        }
        const Complex rho = std::polar(mag(eng), 1.0);
        for (std::size_t k = 0; k < K; ++k) {
            const double mu = nmse(k, rho, s, pa);
            const double lb = nmse_npc_bound(rho, s.zeta(k), s.R0[k]);
            worst_gap = std::max(worst_gap, lb - mu);
            if (pa.cohort(k).size() == 1) {
                worst_equal = std::max(worst_equal, std::abs(mu - lb));
                ++n_alone;
            }
        }
    };
    for (int i = 0; i < 1000; ++i) {
        const std::size_t K = pick_k(eng);
        std::uniform_int_distribution<std::size_t> pick_t(1, K);
        check(K, pick_m(eng), pick_t(eng), false);
    }
    for (int i = 0; i < 200; ++i) {
        const std::size_t K = pick_k(eng);
        check(K, pick_m(eng), K, true);
    }
    Outcome o;
    o.pass = worst_gap <= 1e-12 && worst_equal <= 1e-10 && n_alone > 0;
    o.detail = "bound - nmse " + fmt(worst_gap) + ", equality case " + fmt(worst_equal) + " over " +
               std::to_string(n_alone) + " users (tol 1e-10)";
    return o;
}

Outcome c8_ase_shape(const Paths&)
{
    Outcome o;
    const CGrid grid;
    std::string parts;
    for (Combiner c : {Combiner::MR, Combiner::MMSE}) {
        SimulationConfig flat;
        flat.array.M = 32;
        flat.stride = 8;
        flat.n_channel = 2;
        flat.no_aging = true;
        const AseCurve a = ase_curve(flat, c, grid, MonteCarlo{4, 1, 1});
        bool monotone = true;
        for (std::size_t i = 1; i < a.ase_mean.size(); ++i)
            monotone = monotone && a.ase_mean[i] >= a.ase_mean[i - 1];

        SimulationConfig aged;
        aged.array.M = 32;
        aged.stride = 8;
        aged.v = 33.33;
        aged.sigma_T_deg = 35.0;
        const AseCurve b = ase_curve(aged, c, grid, MonteCarlo{20, 1, 1});
        const bool interior = b.c_opt > b.c_grid.front() && b.c_opt < b.c_grid.back();
        o.pass = o.pass && monotone && interior;
        parts += to_string(c) + ": rho=1 " + (monotone ? "monotone" : "NOT monotone") + ", aged C_opt " +
                 std::to_string(b.c_opt) + (interior ? " interior" : " AT ENDPOINT") + "; ";
    }
    o.detail = parts;
    return o;
}

constexpr double kReference[4][4] = {
    {568.91, -5.51, -53.92, 4.04},
    {298.24, -1.35, -20.14, -7.72},
    {613.79, -6.03, -50.18, 0.63},
    {522.58, -5.42, -46.94, 7.61},
};

Outcome c9_regression(const Paths& paths)
{
    Outcome o;
    double worst = 0.0;
    double worst_r2 = 0.0;
    for (const auto& row : kReference) {
        std::vector<FitSample> samples;
        for (double v : {16.67, 25.0, 33.33})
            for (double sT : {5.0, 15.0, 35.0})
                for (double sR : {5.0, 15.0, 35.0}) {
                    FitSample s;
                    s.point.v = v;
                    s.point.sigma_T_deg = sT;
                    s.point.sigma_R_deg = sR;
                    s.c_opt = row[0] + row[1] * v + row[2] * std::sqrt(sT) + row[3] * std::sqrt(sR);
                    samples.push_back(s);
                }
        const FitModel m = fit_copt_model(samples);
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(m.coeffs[static_cast<std::size_t>(j)] - row[j]));
        worst_r2 = std::max(worst_r2, std::abs(m.r2bar - 1.0));
    }
    o.pass = worst <= 1e-6 && worst_r2 <= 1e-12;
    o.detail = "synthetic coeff err " + fmt(worst) + ", |r2bar - 1| " + fmt(worst_r2) + "; ";

    for (const char* name : {"freeway", "manhattan"}) {
        const fs::path cfg = paths.configs / (std::string("sweep_") + name + ".json");
        const fs::path dir = paths.work / name;
        fs::create_directories(dir);
        const fs::path log = dir / "run.log";
        const std::string q = "'" + paths.cli + "' --config '" + cfg.string() + "' --out '" + dir.string() + "' -q ";
        if (!run(q + "--resume ase-sweep", log) ||
            !run(q + "copt-fit --input '" + (dir / "ase_sweep.csv").string() + "'", log)) {
            o.pass = false;
            o.detail += std::string(name) + ": CLI failed (see " + log.string() + "); ";
            continue;
        }
        const auto j = nlohmann::json::parse(slurp(dir / "copt_fit.json"));
        for (const auto& f : j.at("fits")) {
            const double r2 = f.at("r2bar").get<double>();
            const double av = f.at("coeffs").at("a_v").get<double>();
            const double aT = f.at("coeffs").at("a_T").get<double>();
            const bool ok = r2 >= 0.8 && av < 0.0 && aT < 0.0;
            o.pass = o.pass && ok;
            o.detail += f.at("scenario").get<std::string>() + "/" + f.at("combiner").get<std::string>() +
                        " r2bar " + fmt(r2) + " a_v " + fmt(av) + " a_T " + fmt(aT) + (ok ? "" : " FAIL") + "; ";
        }
        if (j.at("fits").size() != 2) {
            o.pass = false;
            o.detail += std::string(name) + ": expected two fits; ";
        }
    }
    return o;
}

Outcome c10_threads(const Paths& paths)
{
    const fs::path dir = paths.work / "threads";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path cfg = dir / "config.json";
    std::ofstream(cfg) << R"({
  "scenario": "freeway",
  "seed": 3,
  "array": {"M": 8},
  "monte_carlo": {"n_drops": 3, "n_channel": 2, "stride": 8},
  "c_grid": {"stop": 300},
  "sweep": {"scenarios": ["freeway"], "combiners": ["mr", "mmse"],
            "sigma_T_deg": [5.0, 45.0], "sigma_R_deg": [15.0], "v_freeway": [19.44, 38.89]}
})";
    Outcome o;
    std::vector<std::string> csvs;
    for (int threads : {1, 3}) {
        const fs::path out = dir / ("t" + std::to_string(threads));
        const std::string cmd = "'" + paths.cli + "' --config '" + cfg.string() + "' --out '" + out.string() +
                                "' --threads " + std::to_string(threads) + " -q ase-sweep";
        if (!run(cmd, dir / "run.log")) {
            o.pass = false;
            o.detail = "CLI failed (see " + (dir / "run.log").string() + ")";
            return o;
        }
        csvs.push_back(slurp(out / "ase_sweep.csv"));
    }
    o.pass = !csvs[0].empty() && csvs[0] == csvs[1];
    o.detail = std::to_string(csvs[0].size()) + " bytes, " + (o.pass ? "identical" : "DIFFERENT") +
               " for --threads 1 and 3";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 4) {
        std::cerr << "usage: vaging_acceptance <vaging-cli> <config-dir> <work-dir>\n";
        return 2;
    }
    Paths paths{argv[1], argv[2], argv[3]};
    fs::create_directories(paths.work);

    const std::vector<std::pair<const char*, std::function<Outcome(const Paths&)>>> criteria{
        {"closed-form acf/scf vs quadrature", c1_closed_form},
        {"isotropic reductions to J0", c2_isotropic},
        {"sigma to kappa golden values", c3_sigma_kappa},
        {"coherence block golden values", c4_coherence},
        {"channel and estimate distributions", c5_distributions},
        {"combiner optimality and scale invariance", c6_optimality},
        {"nmse no-contamination bound", c7_nmse_bound},
        {"ase shape in C", c8_ase_shape},
        {"C_opt regression pipeline", c9_regression},
        {"thread-count reproducibility", c10_threads},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second(paths);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " - "
                  << o.detail << " [" << fmt(secs) << " s]" << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
