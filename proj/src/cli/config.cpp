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

#include "vaging/app/config.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vaging/errors.hpp"

namespace vaging::app {

using nlohmann::json;

namespace {

json opt(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

// Reads known keys of one JSON object and rejects everything else.
class Section {
public:
    Section(const json& j, std::string name) : j_(j), name_(std::move(name))
    {
        if (!j_.is_object())
            throw ConfigError("config: '" + name_ + "' must be an object");
    }

    template <typename T>
    void get(const char* key, T& out)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        if (it == j_.end())
            return;
        try {
            out = it->template get<T>();
        } catch (const json::exception& e) {
            throw ConfigError("config: bad value for '" + name_ + "." + key + "': " + e.what());
        }
    }

    void get(const char* key, std::optional<double>& out)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        if (it == j_.end())
            return;
        if (it->is_null()) {
            out.reset();
            return;
        }
        double x = 0.0;
        get(key, x);
        out = x;
    }

    const json* child(const char* key)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    void finish() const
    {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key()))
                throw ConfigError("config: unknown key '" + name_ + "." + it.key() + "'");
    }

private:
    const json& j_;
    std::string name_;
    std::set<std::string> seen_;
};

json to_json(const RunConfig& c)
{
    const auto& fw = c.freeway.layout;
    const auto& mh = c.manhattan.layout;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["scenario"] = c.scenario;
    j["combiner"] = c.combiner;
    j["seed"] = c.seed;
    j["array"] = {{"M", c.array.M}, {"d", c.array.d}, {"f_c", c.array.f_c}};
    j["link"] = {{"Ts", c.link.Ts},
                 {"T", c.link.T},
                 {"power", c.link.power},
                 {"noise_dbm_per_hz", c.link.noise_dbm_per_hz},
                 {"noise_var", opt(c.link.noise_var)},
                 {"sigma_T_deg", c.link.sigma_T_deg},
                 {"sigma_R_deg", c.link.sigma_R_deg},
                 {"kappa_T", opt(c.link.kappa_T)},
                 {"kappa_R", opt(c.link.kappa_R)},
                 {"correlation", c.link.correlation},
                 {"no_aging", c.link.no_aging},
                 {"shadow_std_db", c.link.shadow_std_db}};
    j["freeway"] = {{"cells", fw.cells},         {"isd", fw.isd},
                    {"bs_offset", fw.bs_offset}, {"bs_height", fw.bs_height},
                    {"lanes", fw.lanes},         {"lane_width", fw.lane_width},
                    {"vue_height", fw.vue_height}, {"alpha_rad", fw.alpha},
                    {"v", c.freeway.v},          {"density", c.freeway.density}};
    j["manhattan"] = {{"blocks_x", mh.blocks_x},     {"blocks_y", mh.blocks_y},
                      {"block_x", mh.block_x},       {"block_y", mh.block_y},
                      {"street_width", mh.street_width}, {"lanes", mh.lanes},
                      {"lane_width", mh.lane_width}, {"sidewalk", mh.sidewalk},
                      {"bs_height", mh.bs_height},   {"vue_height", mh.vue_height},
                      {"alpha_rad", mh.alpha},       {"v", c.manhattan.v},
                      {"density", c.manhattan.density}};
    j["monte_carlo"] = {{"n_drops", c.n_drops}, {"n_channel", c.n_channel}, {"stride", c.stride}};
    j["c_grid"] = {{"start", c.c_grid.start},
                   {"stop", c.c_grid.stop},
                   {"step", c.c_grid.step},
                   {"refine_step", c.c_grid.refine_step},
                   {"refine_halfwidth", c.c_grid.refine_halfwidth}};
    j["sweep"] = {{"scenarios", c.sweep.scenarios},   {"combiners", c.sweep.combiners},
                  {"sigma_T_deg", c.sweep.sigma_T_deg}, {"sigma_R_deg", c.sweep.sigma_R_deg},
                  {"v_freeway", c.sweep.v_freeway},   {"v_manhattan", c.sweep.v_manhattan}};
    j["se"] = {{"C", c.se_C}};
    j["stcc"] = {{"d_max", c.stcc.d_max},
                 {"d_points", c.stcc.d_points},
                 {"tau_max", c.stcc.tau_max},
                 {"tau_points", c.stcc.tau_points}};
    return j;
}

void read_section(Section& parent, const char* key, const std::function<void(Section&)>& body)
{
    if (const json* j = parent.child(key)) {
        Section s(*j, key);
        body(s);
        s.finish();
    }
}

} // namespace

std::string to_json_text(const RunConfig& cfg) { return to_json(cfg).dump(2) + "\n"; }

RunConfig from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: not valid JSON: ") + e.what());
    }
    RunConfig c;
    Section root(j, "config");
    int version = kSchemaVersion;
    root.get("schema_version", version);
    if (version != kSchemaVersion)
        throw ConfigError("config: unsupported schema_version " + std::to_string(version));
    root.get("scenario", c.scenario);
    root.get("combiner", c.combiner);
    root.get("seed", c.seed);
    read_section(root, "array", [&](Section& s) {
        s.get("M", c.array.M);
        s.get("d", c.array.d);
        s.get("f_c", c.array.f_c);
    });
    read_section(root, "link", [&](Section& s) {
        s.get("Ts", c.link.Ts);
        s.get("T", c.link.T);
        s.get("power", c.link.power);
        s.get("noise_dbm_per_hz", c.link.noise_dbm_per_hz);
        s.get("noise_var", c.link.noise_var);
        s.get("sigma_T_deg", c.link.sigma_T_deg);
        s.get("sigma_R_deg", c.link.sigma_R_deg);
        s.get("kappa_T", c.link.kappa_T);
        s.get("kappa_R", c.link.kappa_R);
        s.get("correlation", c.link.correlation);
        s.get("no_aging", c.link.no_aging);
        s.get("shadow_std_db", c.link.shadow_std_db);
    });
    read_section(root, "freeway", [&](Section& s) {
        auto& p = c.freeway.layout;
        s.get("cells", p.cells);
        s.get("isd", p.isd);
        s.get("bs_offset", p.bs_offset);
        s.get("bs_height", p.bs_height);
        s.get("lanes", p.lanes);
        s.get("lane_width", p.lane_width);
        s.get("vue_height", p.vue_height);
        s.get("alpha_rad", p.alpha);
        s.get("v", c.freeway.v);
        s.get("density", c.freeway.density);
    });
    read_section(root, "manhattan", [&](Section& s) {
        auto& p = c.manhattan.layout;
        s.get("blocks_x", p.blocks_x);
        s.get("blocks_y", p.blocks_y);
        s.get("block_x", p.block_x);
        s.get("block_y", p.block_y);
        s.get("street_width", p.street_width);
        s.get("lanes", p.lanes);
        s.get("lane_width", p.lane_width);
        s.get("sidewalk", p.sidewalk);
        s.get("bs_height", p.bs_height);
        s.get("vue_height", p.vue_height);
        s.get("alpha_rad", p.alpha);
        s.get("v", c.manhattan.v);
        s.get("density", c.manhattan.density);
    });
    read_section(root, "monte_carlo", [&](Section& s) {
        s.get("n_drops", c.n_drops);
        s.get("n_channel", c.n_channel);
        s.get("stride", c.stride);
    });
    read_section(root, "c_grid", [&](Section& s) {
        s.get("start", c.c_grid.start);
        s.get("stop", c.c_grid.stop);
        s.get("step", c.c_grid.step);
        s.get("refine_step", c.c_grid.refine_step);
        s.get("refine_halfwidth", c.c_grid.refine_halfwidth);
    });
    read_section(root, "sweep", [&](Section& s) {
        s.get("scenarios", c.sweep.scenarios);
        s.get("combiners", c.sweep.combiners);
        s.get("sigma_T_deg", c.sweep.sigma_T_deg);
        s.get("sigma_R_deg", c.sweep.sigma_R_deg);
        s.get("v_freeway", c.sweep.v_freeway);
        s.get("v_manhattan", c.sweep.v_manhattan);
    });
    read_section(root, "se", [&](Section& s) { s.get("C", c.se_C); });
    read_section(root, "stcc", [&](Section& s) {
        s.get("d_max", c.stcc.d_max);
        s.get("d_points", c.stcc.d_points);
        s.get("tau_max", c.stcc.tau_max);
        s.get("tau_points", c.stcc.tau_points);
    });
    root.finish();
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

void RunConfig::validate() const
{
    (void)scenario_from_string(scenario);
    (void)combiner_from_string(combiner);
    for (const auto& s : sweep.scenarios)
        (void)scenario_from_string(s);
    for (const auto& s : sweep.combiners)
        (void)combiner_from_string(s);
    if (link.correlation != "von_mises" && link.correlation != "legacy")
        throw ConfigError("config: link.correlation must be von_mises or legacy");
    if (n_drops < 1)
        throw ConfigError("config: monte_carlo.n_drops must be >= 1");
    if (stcc.d_points < 1 || stcc.tau_points < 1)
        throw ConfigError("config: stcc grids need at least one point");
    if (!(stcc.d_max >= 0.0) || !(stcc.tau_max >= 0.0))
        throw ConfigError("config: stcc ranges must be non-negative");
    if (se_C <= link.T)
        throw ConfigError("config: se.C must exceed link.T");
    c_grid.validate(link.T);
    simulation(scenario_from_string(scenario)).validate();
}

SimulationConfig RunConfig::simulation(Scenario s) const
{
    SimulationConfig sim;
    if (s == Scenario::Freeway) {
        sim.layout = build_freeway(freeway.layout);
        sim.v = freeway.v;
        sim.density = freeway.density;
    } else {
        sim.layout = build_manhattan(manhattan.layout);
        sim.v = manhattan.v;
        sim.density = manhattan.density;
    }
    sim.array = array;
    sim.Ts = link.Ts;
    sim.T = link.T;
    sim.power = link.power;
    sim.noise_var = link.noise_var ? *link.noise_var : thermal_noise_variance(link.Ts, link.noise_dbm_per_hz);
    sim.sigma_T_deg = link.sigma_T_deg;
    sim.sigma_R_deg = link.sigma_R_deg;
    sim.kappa_T_override = link.kappa_T;
    sim.kappa_R_override = link.kappa_R;
    sim.model = link.correlation == "legacy" ? CorrelationModel::Legacy : CorrelationModel::VonMises;
    sim.no_aging = link.no_aging;
    sim.shadow_std_db = link.shadow_std_db;
    sim.n_channel = n_channel;
    sim.stride = stride;
    return sim;
}

std::vector<SweepPoint> RunConfig::sweep_points(Scenario s, Combiner c) const
{
    const auto& speeds = s == Scenario::Freeway ? sweep.v_freeway : sweep.v_manhattan;
    std::vector<SweepPoint> pts;
    for (double st : sweep.sigma_T_deg)
        for (double sr : sweep.sigma_R_deg)
            for (double v : speeds)
                pts.push_back({s, c, st, sr, v});
    return pts;
}

} // namespace vaging::app
