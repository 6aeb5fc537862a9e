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

#include "vaging/app/schema.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "vaging/app/config.hpp"
#include "vaging/errors.hpp"
#include "vaging/rng.hpp"

namespace vaging::app {

namespace {

CsvSchema make(std::string name, std::vector<std::string> columns, std::size_t leading_text = 0)
{
    std::vector<bool> numeric(columns.size(), true);
    for (std::size_t i = 0; i < leading_text; ++i)
        numeric[i] = false;
    return {std::move(name), std::move(columns), std::move(numeric)};
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, sep))
        out.push_back(cur);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

bool is_number(const std::string& s)
{
    if (s.empty())
        return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

bool is_hex40(const std::string& s)
{
    if (s.size() != 40)
        return false;
    for (char c : s)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')))
            return false;
    return true;
}

std::map<std::string, std::string> parse_preamble(const std::string& line)
{
    std::map<std::string, std::string> kv;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos)
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

} // namespace

const std::vector<CsvSchema>& csv_schemas()
{
    static const std::vector<CsvSchema> all{
        make("stcc", {"d", "tau", "abs_stcc", "re", "im"}),
        make("se", {"vue_id", "bs_id", "pilot", "G_db", "block_se"}),
        make("ase_sweep", {"scenario", "combiner", "sigma_T_deg", "sigma_R_deg", "v", "C", "ase_mean", "ase_stderr"}, 2),
        make("copt", {"scenario", "combiner", "sigma_T_deg", "sigma_R_deg", "v", "c_opt", "endpoint_warning"}, 2),
        make("delta_ase", {"scenario", "combiner", "sigma_T_deg", "sigma_R_deg", "v", "c_star", "c_v", "ase_star",
                           "ase_star_stderr", "ase_v", "ase_v_stderr", "delta_ase", "delta_stderr"}, 2),
    };
    return all;
}

const CsvSchema& csv_schema(const std::string& name)
{
    for (const auto& s : csv_schemas())
        if (s.name == name)
            return s;
    throw ConfigError("unknown CSV schema '" + name + "'");
}

std::string csv_preamble(const std::string& schema, const std::string& config_hash)
{
    const CsvSchema& s = csv_schema(schema);
    std::string out = "# vaging schema=" + schema + " schema_version=" + std::to_string(kSchemaVersion) +
                      " config_hash=" + config_hash + " generator=" + kGeneratorFamily + "\n";
    for (std::size_t i = 0; i < s.columns.size(); ++i)
        out += (i ? "," : "") + s.columns[i];
    return out + "\n";
}

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Validation validate_csv_text(const std::string& text)
{
    Validation v;
    auto fail = [&](std::string msg) {
        v.ok = false;
        v.errors.push_back(std::move(msg));
    };
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# vaging ", 0) != 0) {
        fail("missing '# vaging' preamble line");
        return v;
    }
    auto kv = parse_preamble(line);
    v.kind = kv["schema"];
    const CsvSchema* schema = nullptr;
    for (const auto& s : csv_schemas())
        if (s.name == v.kind)
            schema = &s;
    if (!schema) {
        fail("unknown schema '" + v.kind + "'");
        return v;
    }
    if (kv["schema_version"] != std::to_string(kSchemaVersion))
        fail("unsupported schema_version '" + kv["schema_version"] + "'");
    if (!is_hex40(kv["config_hash"]))
        fail("config_hash is not a 40-digit hex id");

    if (!std::getline(in, line)) {
        fail("missing header line");
        return v;
    }
    if (split(line, ',') != schema->columns)
        fail("header does not match schema '" + schema->name + "'");

    std::size_t lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        const auto fields = split(line, ',');
        if (fields.size() != schema->columns.size()) {
            fail("line " + std::to_string(lineno) + ": expected " + std::to_string(schema->columns.size()) +
                 " fields, got " + std::to_string(fields.size()));
            continue;
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (schema->numeric[i] ? !is_number(fields[i]) : fields[i].empty())
                fail("line " + std::to_string(lineno) + ": bad value in column '" + schema->columns[i] + "'");
        }
    }
    return v;
}

Validation validate_json_text(const std::string& text)
{
    using nlohmann::json;
    Validation v;
    auto fail = [&](std::string msg) {
        v.ok = false;
        v.errors.push_back(std::move(msg));
    };
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("not valid JSON: ") + e.what());
        return v;
    }
    if (!j.is_object()) {
        fail("top level must be an object");
        return v;
    }
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
        fail("schema_version missing or unsupported");
    if (!j.contains("config_hash") || !j["config_hash"].is_string() ||
        !is_hex40(j["config_hash"].get<std::string>()))
        fail("config_hash missing or malformed");
    if (!j.contains("kind") || !j["kind"].is_string()) {
        fail("kind missing");
        return v;
    }
    v.kind = j["kind"].get<std::string>();

    static const std::map<std::string, std::vector<std::pair<std::string, json::value_t>>> required{
        {"se", {{"C", json::value_t::number_unsigned}, {"ase", json::value_t::number_float},
                {"ase_stderr", json::value_t::number_float}, {"users", json::value_t::array}}},
        {"ase_sweep", {{"points", json::value_t::array}, {"config", json::value_t::object}}},
        {"copt_fit", {{"fits", json::value_t::array}}},
        {"layout", {{"scenario", json::value_t::string}, {"bs", json::value_t::array},
                    {"lanes", json::value_t::array}, {"vues", json::value_t::array}}},
    };
    auto it = required.find(v.kind);
    if (it == required.end()) {
        fail("unknown kind '" + v.kind + "'");
        return v;
    }
    for (const auto& [key, type] : it->second) {
        if (!j.contains(key)) {
            fail("missing key '" + key + "'");
            continue;
        }
        const auto actual = j[key].type();
        const bool numeric_ok = (type == json::value_t::number_float || type == json::value_t::number_unsigned) &&
                                j[key].is_number();
        if (actual != type && !numeric_ok)
            fail("key '" + key + "' has the wrong type");
    }
    return v;
}

Validation validate_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        Validation v;
        v.ok = false;
        v.errors.push_back("cannot open '" + path + "'");
        return v;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return is_json ? validate_json_text(ss.str()) : validate_csv_text(ss.str());
}

} // namespace vaging::app
