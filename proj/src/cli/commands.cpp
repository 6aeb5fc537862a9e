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

#include "vaging/app/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vaging/app/content_hash.hpp"
#include "vaging/app/schema.hpp"
#include "vaging/correlation.hpp"
#include "vaging/errors.hpp"
#include "vaging/simulation.hpp"
#include "vaging/sweep.hpp"

namespace vaging::app {

using nlohmann::json;
namespace fs = std::filesystem;

std::string config_hash(const RunConfig& cfg) { return git_blob_hash(to_json_text(cfg)); }

namespace {

using Clock = std::chrono::steady_clock;

void log_line(const CommandOptions& opt, const std::string& msg)
{
    if (opt.log)
        *opt.log << msg << std::endl;
}

fs::path output_path(const CommandOptions& opt, const std::string& name)
{
    fs::create_directories(opt.out_dir);
    return fs::path(opt.out_dir) / name;
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i)
        out += (i ? "," : "") + fields[i];
    return out;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ','))
        out.push_back(cur);
    return out;
}

json run_info(const CommandOptions& opt, Clock::time_point start)
{
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {{"wall_seconds", secs}, {"threads", opt.threads}, {"generator", kGeneratorFamily}};
}

std::vector<double> linspace(double hi, std::size_t n)
{
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? 0.0 : hi * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

std::string point_key(const SweepPoint& p)
{
    return join({to_string(p.scenario), to_string(p.combiner), format_double(p.sigma_T_deg),
                 format_double(p.sigma_R_deg), format_double(p.v)});
}

// Rows of a point in the sweep CSV, kept verbatim.
struct PointRows {
    std::vector<std::string> rows;
    std::vector<std::size_t> c;
    std::vector<double> mean;
};

constexpr const char* kDoneMarker = "# point-complete ";

} // namespace

void cmd_stcc(const RunConfig& cfg, const CommandOptions& opt)
{
    const std::string hash = config_hash(cfg);
    const double kT = sigma_to_kappa(35.0);
    const double kR = sigma_to_kappa(15.0);
    struct Set {
        std::string name;
        double kappa_T, kappa_R, rel;
    };
    const std::vector<Set> sets{{"isotropic", 0.0, 0.0, 0.0},
                                {"nonisotropic_0deg", kT, kR, 0.0},
                                {"nonisotropic_90deg", kT, kR, 0.5 * kPi}};
    const std::vector<std::pair<std::string, double>> speeds{{"v16.67", 16.67}, {"v33.33", 33.33}};
    const auto d_grid = linspace(cfg.stcc.d_max, cfg.stcc.d_points);
    const auto tau_grid = linspace(cfg.stcc.tau_max, cfg.stcc.tau_points);

    for (const auto& [vname, v] : speeds) {
        for (const Set& set : sets) {
            // gamma - phi_c = alpha - theta_c = rel, central directions at 0.
            const AngularProfile profile(set.kappa_T, set.kappa_R, 0.0, 0.0, set.rel, set.rel);
            std::string out = csv_preamble("stcc", hash);
            out += "# set=" + set.name + " kappa_T=" + format_double(set.kappa_T) +
                   " kappa_R=" + format_double(set.kappa_R) + " relative_angle_rad=" + format_double(set.rel) +
                   " v=" + format_double(v) + " p_minus_q=1\n";
            for (double d : d_grid) {
                ArrayGeometry array{2, d, cfg.array.f_c};
                const Complex s = scf(profile, array, 1, 0);
                for (double tau : tau_grid) {
                    const Complex val = acf(profile, v, array, tau) * s;
                    out += join({format_double(d), format_double(tau), format_double(std::abs(val)),
                                 format_double(val.real()), format_double(val.imag())}) +
                           "\n";
                }
            }
            const auto path = output_path(opt, "stcc_" + set.name + "_" + vname + ".csv");
            write_file(path, out);
            log_line(opt, "wrote " + path.string());
        }
    }
}

void cmd_se(const RunConfig& cfg, const CommandOptions& opt)
{
    const auto start = Clock::now();
    const std::string hash = config_hash(cfg);
    const Scenario scenario = scenario_from_string(cfg.scenario);
    const Combiner kind = combiner_from_string(cfg.combiner);
    const SimulationConfig sim = cfg.simulation(scenario);
    sim.validate();
    const std::size_t C = cfg.se_C;

    const NetworkDrop drop = make_drop(sim, cfg.seed, 0);
    const DropSe se = simulate_drop(sim, kind, drop, cfg.seed, C - sim.T);
    const std::size_t L = sim.layout.cells();

    std::vector<double> realization_ase;
    for (Eigen::Index r = 0; r < se.realization_sum.rows(); ++r) {
        const Eigen::VectorXd row = se.realization_sum.row(r).transpose();
        const std::size_t cs[] = {C};
        realization_ase.push_back(
            ase_from_grid(std::span<const double>(row.data(), static_cast<std::size_t>(row.size())), se.grid, cs,
                          sim.T, L)[0]);
    }
    const MeanStderr ms = mean_stderr(realization_ase);

    std::string csv = csv_preamble("se", hash);
    json users = json::array();
    for (std::size_t k = 0; k < drop.vues.size(); ++k) {
        const std::size_t b = drop.serving[k];
        const BaseStation& bs = sim.layout.bs_list[b];
        const double D = wrap_distance(sim.layout, bs, drop.vues[k].x, drop.vues[k].y);
        const double g_db = path_gain(D, drop.shadow_db[k][b]).gain_db;
        const Eigen::VectorXd row = se.user_se.row(static_cast<Eigen::Index>(k)).transpose();
        const auto prefix =
            grid_prefix_sums(std::span<const double>(row.data(), static_cast<std::size_t>(row.size())), se.grid);
        const double block = prefix[C - sim.T] / static_cast<double>(C);
        csv += join({std::to_string(k), std::to_string(b), std::to_string(drop.pilots.pilot_of[k]),
                     format_double(g_db), format_double(block)}) +
               "\n";
        users.push_back({{"vue_id", k}, {"bs_id", b}, {"pilot", drop.pilots.pilot_of[k]}, {"G_db", g_db},
                         {"block_se", block}});
    }
    csv += "# C=" + std::to_string(C) + " cells=" + std::to_string(L) + " realizations=" +
           std::to_string(realization_ase.size()) + "\n";
    csv += "# ase=" + format_double(ms.mean) + " ase_stderr=" + format_double(ms.std_error) + "\n";

    write_file(output_path(opt, "se.csv"), csv);
    json j{{"schema_version", kSchemaVersion}, {"kind", "se"},      {"config_hash", hash},
           {"scenario", cfg.scenario},       {"combiner", cfg.combiner}, {"C", C},
           {"ase", ms.mean},                 {"ase_stderr", ms.std_error}, {"users", users},
           {"run_info", run_info(opt, start)}};
    write_file(output_path(opt, "se.json"), j.dump(2) + "\n");
    log_line(opt, "se: ASE = " + format_double(ms.mean) + " +- " + format_double(ms.std_error) +
                      " bit/s/Hz/cell at C = " + std::to_string(C));
}

void cmd_ase_sweep(const RunConfig& cfg, const CommandOptions& opt)
{
    const auto start = Clock::now();
    const std::string hash = config_hash(cfg);
    const fs::path csv_path = output_path(opt, "ase_sweep.csv");
    const std::string preamble = csv_preamble("ase_sweep", hash);

    std::vector<SweepPoint> points;
    for (const auto& sname : cfg.sweep.scenarios)
        for (const auto& cname : cfg.sweep.combiners) {
            const auto pts = cfg.sweep_points(scenario_from_string(sname), combiner_from_string(cname));
            points.insert(points.end(), pts.begin(), pts.end());
        }

    // Completed points from a previous partial run.
    std::map<std::string, PointRows> done;
    if (opt.resume && fs::exists(csv_path)) {
        const std::string text = read_file(csv_path);
        if (text.compare(0, preamble.size(), preamble) != 0)
            throw ConfigError("--resume: existing " + csv_path.string() + " was produced by a different config");
        std::map<std::string, PointRows> pending;
        std::istringstream in(text.substr(preamble.size()));
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind(kDoneMarker, 0) == 0) {
                const std::string key = line.substr(std::char_traits<char>::length(kDoneMarker));
                done[key] = std::move(pending[key]);
                pending.erase(key);
                continue;
            }
            if (line.empty() || line[0] == '#')
                continue;
            const auto f = split(line);
            if (f.size() != 8)
                continue; // truncated tail of an interrupted write
            const std::string key = join({f[0], f[1], f[2], f[3], f[4]});
            PointRows& pr = pending[key];
            pr.rows.push_back(line);
            pr.c.push_back(static_cast<std::size_t>(std::stoull(f[5])));
            pr.mean.push_back(std::stod(f[6]));
        }
        log_line(opt, "resume: " + std::to_string(done.size()) + " completed point(s) found");
    }

    // Rewrite the working file with completed points only, then append.
    {
        std::string text = preamble;
        for (const SweepPoint& p : points) {
            auto it = done.find(point_key(p));
            if (it == done.end())
                continue;
            for (const auto& r : it->second.rows)
                text += r + "\n";
            text += kDoneMarker + it->first + "\n";
        }
        write_file(csv_path, text);
    }

    const MonteCarlo mc = cfg.monte_carlo(opt.threads);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SweepPoint& p = points[i];
        const std::string key = point_key(p);
        if (done.count(key))
            continue;
        const auto t0 = Clock::now();
        const SimulationConfig sim = apply_point(cfg.simulation(p.scenario), p);
        const AseCurve curve = ase_curve(sim, p.combiner, cfg.c_grid, mc);
        PointRows pr;
        std::string block;
        for (std::size_t j = 0; j < curve.c_grid.size(); ++j) {
            const std::string row = key + "," + std::to_string(curve.c_grid[j]) + "," +
                                    format_double(curve.ase_mean[j]) + "," + format_double(curve.ase_stderr[j]);
            pr.rows.push_back(row);
            pr.c.push_back(curve.c_grid[j]);
            pr.mean.push_back(curve.ase_mean[j]);
            block += row + "\n";
        }
        block += kDoneMarker + key + "\n";
        {
            std::ofstream out(csv_path, std::ios::binary | std::ios::app);
            out << block;
        }
        done[key] = std::move(pr);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        log_line(opt, "[" + std::to_string(i + 1) + "/" + std::to_string(points.size()) + "] " + key +
                          ": C_opt = " + std::to_string(curve.c_opt) + (curve.endpoint_warning ? " (endpoint)" : "") +
                          " in " + format_double(secs) + " s");
    }

    // Canonical file in point order, plus the summary.
    const std::vector<std::size_t> coarse = cfg.c_grid.coarse();
    const std::set<std::size_t> coarse_set(coarse.begin(), coarse.end());
    std::string text = preamble;
    json summary = json::array();
    for (const SweepPoint& p : points) {
        const std::string key = point_key(p);
        const PointRows& pr = done.at(key);
        for (const auto& r : pr.rows)
            text += r + "\n";
        text += kDoneMarker + key + "\n";

        std::vector<std::size_t> cc;
        std::vector<double> cm;
        for (std::size_t j = 0; j < pr.c.size(); ++j)
            if (coarse_set.count(pr.c[j])) {
                cc.push_back(pr.c[j]);
                cm.push_back(pr.mean[j]);
            }
        const CoptResult coarse_opt = find_copt(cc, cm);
        const CoptResult best = find_copt(pr.c, pr.mean);
        summary.push_back({{"scenario", to_string(p.scenario)},
                           {"combiner", to_string(p.combiner)},
                           {"sigma_T_deg", p.sigma_T_deg},
                           {"sigma_R_deg", p.sigma_R_deg},
                           {"v", p.v},
                           {"c_opt", best.c_opt},
                           {"ase_max", pr.mean[best.index]},
                           {"endpoint_warning", coarse_opt.at_endpoint}});
        if (coarse_opt.at_endpoint)
            log_line(opt, "warning: " + key + " peaks at a C grid endpoint; the maximum may lie outside the grid");
    }
    write_file(csv_path, text);
    json j{{"schema_version", kSchemaVersion},
           {"kind", "ase_sweep"},
           {"config_hash", hash},
           {"config", json::parse(to_json_text(cfg))},
           {"points", summary},
           {"run_info", run_info(opt, start)}};
    write_file(output_path(opt, "ase_sweep.json"), j.dump(2) + "\n");
    log_line(opt, "wrote " + csv_path.string());
}

void cmd_copt_fit(const RunConfig& cfg, const CommandOptions& opt)
{
    (void)cfg;
    if (opt.input.empty())
        throw ConfigError("copt-fit: --input <sweep or samples CSV> is required");
    const auto start = Clock::now();
    const std::string text = read_file(opt.input);
    const Validation v = validate_csv_text(text);
    if (!v.ok)
        throw ConfigError("copt-fit: input does not validate: " + v.errors.front());
    if (v.kind != "ase_sweep" && v.kind != "copt")
        throw ConfigError("copt-fit: input must be an ase_sweep or copt CSV");
    const std::string hash = git_blob_hash(text);

    // Group samples per (scenario, combiner) in order of appearance.
    struct Group {
        std::string scenario, combiner;
        std::vector<FitSample> samples;
        std::vector<bool> endpoint;
    };
    std::vector<Group> groups;
    auto group_for = [&](const std::string& s, const std::string& c) -> Group& {
        for (auto& g : groups)
            if (g.scenario == s && g.combiner == c)
                return g;
        groups.push_back({s, c, {}, {}});
        return groups.back();
    };

    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    if (v.kind == "copt") {
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            const auto f = split(line);
            SweepPoint p{scenario_from_string(f[0]), combiner_from_string(f[1]), std::stod(f[2]), std::stod(f[3]),
                         std::stod(f[4])};
            Group& g = group_for(f[0], f[1]);
            g.samples.push_back({p, std::stod(f[5])});
            g.endpoint.push_back(std::stod(f[6]) != 0.0);
        }
    } else {
        std::vector<std::string> order;
        std::map<std::string, PointRows> rows;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            const auto f = split(line);
            const std::string key = join({f[0], f[1], f[2], f[3], f[4]});
            if (!rows.count(key))
                order.push_back(key);
            rows[key].c.push_back(static_cast<std::size_t>(std::stoull(f[5])));
            rows[key].mean.push_back(std::stod(f[6]));
        }
        for (const auto& key : order) {
            const auto f = split(key);
            PointRows& pr = rows[key];
            // Rows are written in ascending C; sort defensively.
            std::vector<std::size_t> idx(pr.c.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pr.c[a] < pr.c[b]; });
            std::vector<std::size_t> cs;
            std::vector<double> ms;
            for (std::size_t i : idx) {
                cs.push_back(pr.c[i]);
                ms.push_back(pr.mean[i]);
            }
            const CoptResult r = find_copt(cs, ms);
            SweepPoint p{scenario_from_string(f[0]), combiner_from_string(f[1]), std::stod(f[2]), std::stod(f[3]),
                         std::stod(f[4])};
            Group& g = group_for(f[0], f[1]);
            g.samples.push_back({p, static_cast<double>(r.c_opt)});
            g.endpoint.push_back(r.at_endpoint);
        }
    }

    std::string copt_csv = csv_preamble("copt", hash);
    json fits = json::array();
    for (const Group& g : groups) {
        for (std::size_t i = 0; i < g.samples.size(); ++i) {
            const auto& s = g.samples[i];
            copt_csv += point_key(s.point) + "," + format_double(s.c_opt) + "," + (g.endpoint[i] ? "1" : "0") + "\n";
        }
        const FitModel m = fit_copt_model(g.samples);
        for (const auto& w : m.warnings)
            log_line(opt, "warning: " + g.scenario + "/" + g.combiner + ": " + w);
        fits.push_back({{"scenario", g.scenario},
                        {"combiner", g.combiner},
                        {"coeffs", {{"a0", m.coeffs[0]}, {"a_v", m.coeffs[1]}, {"a_T", m.coeffs[2]}, {"a_R", m.coeffs[3]}}},
                        {"r2bar", m.r2bar},
                        {"nrmse", m.nrmse},
                        {"n_samples", g.samples.size()},
                        {"warnings", m.warnings}});
        log_line(opt, g.scenario + "/" + g.combiner + ": C* = " + format_double(m.coeffs[0]) + " + " +
                          format_double(m.coeffs[1]) + " v + " + format_double(m.coeffs[2]) + " sqrt(sT) + " +
                          format_double(m.coeffs[3]) + " sqrt(sR), r2bar = " + format_double(m.r2bar) +
                          ", nrmse = " + format_double(m.nrmse));
    }
    if (v.kind == "ase_sweep")
        write_file(output_path(opt, "copt.csv"), copt_csv);
    json j{{"schema_version", kSchemaVersion}, {"kind", "copt_fit"}, {"config_hash", hash},
           {"input", opt.input},             {"fits", fits},       {"run_info", run_info(opt, start)}};
    write_file(output_path(opt, "copt_fit.json"), j.dump(2) + "\n");
}

void cmd_delta_ase(const RunConfig& cfg, const CommandOptions& opt)
{
    if (opt.input.empty())
        throw ConfigError("delta-ase: --input <copt_fit.json> is required");
    const std::string fit_text = read_file(opt.input);
    const Validation val = validate_json_text(fit_text);
    if (!val.ok || val.kind != "copt_fit")
        throw ConfigError("delta-ase: input is not a valid copt_fit JSON");
    const json fits = json::parse(fit_text)["fits"];
    const std::string hash = git_blob_hash(to_json_text(cfg) + fit_text);
    const MonteCarlo mc = cfg.monte_carlo(opt.threads);

    std::string csv = csv_preamble("delta_ase", hash);
    for (const auto& f : fits) {
        const Scenario s = scenario_from_string(f.at("scenario").get<std::string>());
        const Combiner c = combiner_from_string(f.at("combiner").get<std::string>());
        FitModel model;
        const auto& co = f.at("coeffs");
        model.coeffs = {co.at("a0").get<double>(), co.at("a_v").get<double>(), co.at("a_T").get<double>(),
                        co.at("a_R").get<double>()};
        for (const SweepPoint& p : cfg.sweep_points(s, c)) {
            const SimulationConfig sim = apply_point(cfg.simulation(s), p);
            const DeltaAse d = delta_ase(sim, c, model, mc);
            csv += point_key(p) + "," +
                   join({std::to_string(d.c_star), std::to_string(d.c_v), format_double(d.at_star.mean),
                         format_double(d.at_star.std_error), format_double(d.at_v.mean),
                         format_double(d.at_v.std_error), format_double(d.delta), format_double(d.std_error)}) +
                   "\n";
            log_line(opt, point_key(p) + ": C* = " + std::to_string(d.c_star) + ", C_v = " + std::to_string(d.c_v) +
                              ", dASE = " + format_double(d.delta) + " +- " + format_double(d.std_error));
        }
    }
    write_file(output_path(opt, "delta_ase.csv"), csv);
}

void cmd_layout_dump(const RunConfig& cfg, const CommandOptions& opt)
{
    const std::string hash = config_hash(cfg);
    const Scenario scenario = scenario_from_string(cfg.scenario);
    const SimulationConfig sim = cfg.simulation(scenario);
    const NetworkDrop drop = make_drop(sim, cfg.seed, 0);

    json bs = json::array();
    for (std::size_t b = 0; b < sim.layout.cells(); ++b) {
        const auto& s = sim.layout.bs_list[b];
        bs.push_back({{"id", b}, {"x", s.x}, {"y", s.y}, {"height", s.height}, {"alpha", s.alpha}});
    }
    json lanes = json::array();
    for (std::size_t l = 0; l < sim.layout.lanes.size(); ++l) {
        const Lane& lane = sim.layout.lanes[l];
        const auto [x1, y1] = lane.at(lane.length);
        lanes.push_back({{"id", l},
                         {"polyline", {{lane.x0, lane.y0}, {x1, y1}}},
                         {"width", lane.width},
                         {"gamma", lane.gamma}});
    }
    json vues = json::array();
    for (std::size_t k = 0; k < drop.vues.size(); ++k) {
        const Vue& u = drop.vues[k];
        vues.push_back({{"id", k},
                        {"x", u.x},
                        {"y", u.y},
                        {"lane", u.lane},
                        {"gamma", u.gamma},
                        {"serving", drop.serving[k]},
                        {"pilot", drop.pilots.pilot_of[k]}});
    }
    json j{{"schema_version", kSchemaVersion},
           {"kind", "layout"},
           {"config_hash", hash},
           {"scenario", cfg.scenario},
           {"wrap", {{"period_x", sim.layout.wrap.period_x}, {"period_y", sim.layout.wrap.period_y}}},
           {"vue_height", sim.layout.vue_height},
           {"bs", bs},
           {"lanes", lanes},
           {"vues", vues}};
    const auto path = output_path(opt, "layout.json");
    write_file(path, j.dump(2) + "\n");
    log_line(opt, "wrote " + path.string() + " (" + std::to_string(drop.vues.size()) + " VUEs)");
}

} // namespace vaging::app
