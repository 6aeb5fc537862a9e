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

#include "vaging/scenarios.hpp"

#include <cmath>
#include <limits>

#include "vaging/channel.hpp"
#include "vaging/errors.hpp"

namespace vaging {

std::string to_string(Scenario s) { return s == Scenario::Freeway ? "freeway" : "manhattan"; }

Scenario scenario_from_string(const std::string& name)
{
    if (name == "freeway")
        return Scenario::Freeway;
    if (name == "manhattan")
        return Scenario::Manhattan;
    throw ConfigError("unknown scenario '" + name + "' (expected freeway or manhattan)");
}

std::pair<double, double> Lane::at(double s) const
{
    // Lanes are axis-aligned; round the direction so positions stay exact.
    const double ux = std::round(std::cos(gamma));
    const double uy = std::round(std::sin(gamma));
    return {x0 + s * ux, y0 + s * uy};
}

namespace {

void require_positive(double value, const char* what)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw ConfigError(std::string("layout: ") + what + " must be positive");
}

double reduce(double x, double period)
{
    if (period <= 0.0)
        return x;
    double r = std::fmod(x, period);
    if (r < 0.0)
        r += period;
    if (r >= period)
        r -= period;
    return r;
}

double min_image(double d, double period)
{
    if (period <= 0.0)
        return d;
    return d - period * std::round(d / period);
}

// Centerline offsets of n lanes of equal width, symmetric about 0.
std::vector<double> lane_offsets(std::size_t n, double width)
{
    std::vector<double> off(n);
    for (std::size_t j = 0; j < n; ++j)
        off[j] = (static_cast<double>(j) - 0.5 * static_cast<double>(n - 1)) * width;
    return off;
}

} // namespace

NetworkLayout build_freeway(const FreewayParams& p)
{
    if (p.cells < 1)
        throw ConfigError("build_freeway: need at least one BS");
    if (p.lanes < 1)
        throw ConfigError("build_freeway: need at least one lane");
    require_positive(p.isd, "ISD");
    require_positive(p.lane_width, "lane width");
    require_positive(p.bs_height, "BS height");
    if (!(p.bs_offset >= 0.0))
        throw ConfigError("build_freeway: BS offset must be non-negative");

    NetworkLayout layout;
    layout.scenario = Scenario::Freeway;
    layout.vue_height = p.vue_height;
    layout.wrap.period_x = p.isd * static_cast<double>(p.cells);
    for (std::size_t b = 0; b < p.cells; ++b)
        layout.bs_list.push_back({static_cast<double>(b) * p.isd, -p.bs_offset, p.bs_height, p.alpha});

    // Road occupies y in [0, lanes * width]; lane 0 is next to the BSs.
    for (std::size_t i = 0; i < p.lanes; ++i) {
        Lane lane;
        lane.y0 = (static_cast<double>(i) + 0.5) * p.lane_width;
        lane.width = p.lane_width;
        lane.length = layout.wrap.period_x;
        const bool far_side = 2 * i >= p.lanes;
        lane.gamma = far_side ? 0.0 : wrap_angle(kPi);
        lane.x0 = far_side ? 0.0 : layout.wrap.period_x;
        layout.lanes.push_back(lane);
    }
    return layout;
}

NetworkLayout build_manhattan(const ManhattanParams& p)
{
    if (p.blocks_x < 1 || p.blocks_y < 1)
        throw ConfigError("build_manhattan: need at least one block per axis");
    if (p.lanes < 2 || p.lanes % 2 != 0)
        throw ConfigError("build_manhattan: lanes per street must be even and >= 2");
    require_positive(p.block_x, "block width");
    require_positive(p.block_y, "block height");
    require_positive(p.street_width, "street width");
    require_positive(p.lane_width, "lane width");
    require_positive(p.bs_height, "BS height");
    if (!(p.sidewalk >= 0.0))
        throw ConfigError("build_manhattan: sidewalk width must be non-negative");
    if (static_cast<double>(p.lanes) * p.lane_width + 2.0 * p.sidewalk > p.street_width + 1e-9)
        throw ConfigError("build_manhattan: lanes and sidewalks do not fit in the street");

    const double pitch_x = p.block_x + p.street_width;
    const double pitch_y = p.block_y + p.street_width;

    NetworkLayout layout;
    layout.scenario = Scenario::Manhattan;
    layout.vue_height = p.vue_height;
    layout.wrap.period_x = pitch_x * static_cast<double>(p.blocks_x);
    layout.wrap.period_y = pitch_y * static_cast<double>(p.blocks_y);

    // Street centerlines at x = i * pitch_x and y = j * pitch_y; block i spans
    // [i pitch_x + w/2, (i+1) pitch_x - w/2].
    for (std::size_t j = 0; j < p.blocks_y; ++j)
        for (std::size_t i = 0; i < p.blocks_x; ++i)
            layout.bs_list.push_back({static_cast<double>(i) * pitch_x + 0.5 * pitch_x,
                                      static_cast<double>(j) * pitch_y + 0.5 * pitch_y, p.bs_height,
                                      p.alpha});

    const std::vector<double> offsets = lane_offsets(p.lanes, p.lane_width);

    // Counterclockwise around each block: the lanes bordering the block east
    // of a vertical street run south, those bordering the block north of a
    // horizontal street run east.
    for (std::size_t i = 0; i < p.blocks_x; ++i) {
        const double xc = static_cast<double>(i) * pitch_x;
        for (double off : offsets) {
            Lane lane;
            lane.x0 = reduce(xc + off, layout.wrap.period_x);
            lane.width = p.lane_width;
            lane.length = layout.wrap.period_y;
            if (off > 0.0) {
                lane.gamma = -0.5 * kPi;
                lane.y0 = layout.wrap.period_y;
            } else {
                lane.gamma = 0.5 * kPi;
                lane.y0 = 0.0;
            }
            layout.lanes.push_back(lane);
        }
    }
    for (std::size_t j = 0; j < p.blocks_y; ++j) {
        const double yc = static_cast<double>(j) * pitch_y;
        for (double off : offsets) {
            Lane lane;
            lane.y0 = reduce(yc + off, layout.wrap.period_y);
            lane.width = p.lane_width;
            lane.length = layout.wrap.period_x;
            if (off > 0.0) {
                lane.gamma = 0.0;
                lane.x0 = 0.0;
            } else {
                lane.gamma = wrap_angle(kPi);
                lane.x0 = layout.wrap.period_x;
            }
            layout.lanes.push_back(lane);
        }
    }
    return layout;
}

std::vector<Vue> drop_vues(const NetworkLayout& layout, double density, double v, double power,
                           Rng& rng)
{
    if (!(density > 0.0) || !std::isfinite(density))
        throw ConfigError("drop_vues: density must be positive");
    if (!(v >= 0.0))
        throw ConfigError("drop_vues: speed must be non-negative");
    const double min_gap = 2.5 * v;
    const double mean_headway = 1.0 / density;
    if (min_gap > mean_headway)
        throw InfeasibleDensity("drop_vues: minimum gap 2.5 v = " + std::to_string(min_gap) +
                                " m exceeds the mean headway " + std::to_string(mean_headway) + " m");
    const double excess = mean_headway - min_gap;

    std::vector<Vue> vues;
    for (std::size_t l = 0; l < layout.lanes.size(); ++l) {
        const Lane& lane = layout.lanes[l];
        if (lane.length <= min_gap)
            continue;
        const double start = rng.uniform() * lane.length;
        const double end = start + lane.length;
        double s = start;
        while (true) {
            auto [x, y] = lane.at(s);
            vues.push_back({reduce(x, layout.wrap.period_x), reduce(y, layout.wrap.period_y), l,
                            lane.gamma, v, power});
            const double next = s + min_gap + (excess > 0.0 ? rng.exponential(excess) : 0.0);
            if (next + min_gap > end)
                break;
            s = next;
        }
    }
    return vues;
}

std::pair<double, double> wrap_delta(const NetworkLayout& layout, double ax, double ay, double bx,
                                     double by)
{
    return {min_image(bx - ax, layout.wrap.period_x), min_image(by - ay, layout.wrap.period_y)};
}

double wrap_distance(const NetworkLayout& layout, double ax, double ay, double ah, double bx,
                     double by, double bh)
{
    const auto [dx, dy] = wrap_delta(layout, ax, ay, bx, by);
    const double dh = bh - ah;
    return std::sqrt(dx * dx + dy * dy + dh * dh);
}

double wrap_distance(const NetworkLayout& layout, const BaseStation& bs, double x, double y)
{
    return wrap_distance(layout, x, y, layout.vue_height, bs.x, bs.y, bs.height);
}

std::pair<double, double> central_angles(const NetworkLayout& layout, const BaseStation& bs,
                                         const Vue& vue)
{
    const auto [dx, dy] = wrap_delta(layout, vue.x, vue.y, bs.x, bs.y);
    if (std::hypot(dx, dy) < 1e-9)
        throw CoincidentPositions("central_angles: VUE and BS coincide horizontally");
    const double phi_c = wrap_angle(std::atan2(dy, dx));
    return {phi_c, wrap_angle(phi_c + kPi)};
}

std::vector<std::size_t> associate(const NetworkLayout& layout, const std::vector<Vue>& vues,
                                   const std::vector<std::vector<double>>& shadow_db)
{
    if (shadow_db.size() != vues.size())
        throw ConfigError("associate: one shadow row per VUE required");
    std::vector<std::size_t> serving(vues.size(), 0);
    for (std::size_t k = 0; k < vues.size(); ++k) {
        if (shadow_db[k].size() != layout.cells())
            throw ConfigError("associate: one shadow value per BS required");
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < layout.cells(); ++b) {
            const double D = wrap_distance(layout, layout.bs_list[b], vues[k].x, vues[k].y);
            const double g = path_gain(D, shadow_db[k][b]).gain_db;
            if (g > best) {
                best = g;
                serving[k] = b;
            }
        }
    }
    return serving;
}

} // namespace vaging
