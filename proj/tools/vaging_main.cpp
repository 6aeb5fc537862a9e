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

// Command-line front end: one subcommand per pipeline stage.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vaging/app/commands.hpp"
#include "vaging/app/config.hpp"
#include "vaging/app/schema.hpp"
#include "vaging/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct GlobalFlags {
    std::string config_path;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::string out = ".";
    bool paper_fidelity = false;
    std::size_t stride = 0;
    bool resume = false;
    std::string input;
    bool quiet = false;
};

vaging::app::RunConfig resolve(const GlobalFlags& g, const CLI::App& app)
{
    vaging::app::RunConfig cfg = g.config_path.empty() ? vaging::app::RunConfig{} : vaging::app::load_config(g.config_path);
    if (g.paper_fidelity)
        cfg.paper_fidelity();
    if (app.count("--seed"))
        cfg.seed = g.seed;
    if (app.count("--stride"))
        cfg.stride = g.stride;
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vaging: aging-channel massive MIMO vehicular uplink simulator"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags g;
    app.add_option("--config", g.config_path, "JSON config file (defaults apply to missing fields)");
    app.add_option("--seed", g.seed, "Master seed (overrides the config)");
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");
    app.add_option("--out", g.out, "Output directory");
    app.add_flag("--paper-fidelity", g.paper_fidelity, "Full-scale run with M = 100 antennas");
    app.add_option("--stride", g.stride, "Symbol-index decimation stride")->check(CLI::PositiveNumber);
    app.add_flag("--resume", g.resume, "ase-sweep: keep completed points of an existing output");
    app.add_flag("-q,--quiet", g.quiet, "Suppress progress messages");

    auto* stcc = app.add_subcommand("stcc", "Tabulate |rho(tau) s(p,q)| over (d, tau) for the reference sets");
    auto* se = app.add_subcommand("se", "Per-user SE and ASE for one drop at block length se.C");
    auto* sweep = app.add_subcommand("ase-sweep", "ASE vs C curves over the (sigma_T, sigma_R, v) grid");
    auto* fit = app.add_subcommand("copt-fit", "Fit the C_opt linear model to sweep results");
    fit->add_option("--input", g.input, "ase_sweep.csv or a copt samples CSV")->required();
    auto* delta = app.add_subcommand("delta-ase", "ASE(C*) - ASE(C_v) at the sweep points");
    delta->add_option("--input", g.input, "copt_fit.json")->required();
    auto* layout = app.add_subcommand("layout-dump", "Write BSs, lanes and one VUE drop as JSON");
    auto* config = app.add_subcommand("config", "Print the resolved config as JSON");
    auto* validate = app.add_subcommand("validate", "Check emitted files against their schema");
    std::vector<std::string> files;
    validate->add_option("files", files, "CSV or JSON files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*validate) {
            bool all_ok = true;
            for (const auto& f : files) {
                const auto v = vaging::app::validate_file(f);
                std::cout << (v.ok ? "ok   " : "FAIL ") << f << (v.kind.empty() ? "" : " [" + v.kind + "]") << "\n";
                for (const auto& e : v.errors)
                    std::cout << "     " << e << "\n";
                all_ok = all_ok && v.ok;
            }
            return all_ok ? 0 : kExitConfig;
        }

        const vaging::app::RunConfig cfg = resolve(g, app);
        vaging::app::CommandOptions opt;
        opt.out_dir = g.out;
        opt.threads = g.threads;
        opt.resume = g.resume;
        opt.input = g.input;
        opt.log = g.quiet ? nullptr : &std::cerr;

        if (*config)
            std::cout << vaging::app::to_json_text(cfg);
        else if (*stcc)
            vaging::app::cmd_stcc(cfg, opt);
        else if (*se)
            vaging::app::cmd_se(cfg, opt);
        else if (*sweep)
            vaging::app::cmd_ase_sweep(cfg, opt);
        else if (*fit)
            vaging::app::cmd_copt_fit(cfg, opt);
        else if (*delta)
            vaging::app::cmd_delta_ase(cfg, opt);
        else if (*layout)
            vaging::app::cmd_layout_dump(cfg, opt);
    } catch (const vaging::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vaging::IndexError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vaging::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
