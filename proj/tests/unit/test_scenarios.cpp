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

#include <algorithm>
#include <cmath>
#include <map>

#include "vaging/errors.hpp"
#include "vaging/scenarios.hpp"

using namespace vaging;

namespace {

// Position of a VUE along its lane axis.
double axial(const Lane& lane, const Vue& u) { return std::abs(std::cos(lane.gamma)) > 0.5 ? u.x : u.y; }

} // namespace

TEST_CASE("freeway layout geometry")
{
    const NetworkLayout f = build_freeway();
    REQUIRE(f.cells() == 2);
    CHECK(f.bs_list[0].x == 0.0);
    CHECK(f.bs_list[1].x == 1732.0);
    for (const auto& bs : f.bs_list) {
        CHECK(bs.y == -35.0);
        CHECK(bs.height == 35.0);
    }
    CHECK(f.wrap.period_x == 3464.0);
    CHECK(f.wrap.period_y == 0.0);
    REQUIRE(f.lanes.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(f.lanes[i].y0 == Catch::Approx(2.0 + 4.0 * static_cast<double>(i)));
        CHECK(f.lanes[i].length == 3464.0);
        // Lanes 0..2 sit next to the BSs and drive toward -x.
        CHECK(f.lanes[i].gamma == (i < 3 ? -kPi : 0.0));
    }
}

TEST_CASE("manhattan layout geometry")
{
    const NetworkLayout m = build_manhattan();
    REQUIRE(m.cells() == 9);
    CHECK(m.wrap.period_x == 810.0);
    CHECK(m.wrap.period_y == 1359.0);
    CHECK(m.bs_list[0].x == 135.0);
    CHECK(m.bs_list[0].y == 226.5);
    CHECK(m.bs_list[4].x == 405.0);
    CHECK(m.bs_list[4].y == 679.5);
    for (const auto& bs : m.bs_list)
        CHECK(bs.height == 25.0);
    CHECK(m.lanes.size() == 24);
}

TEST_CASE("layouts reject degenerate inputs")
{
    FreewayParams f;
    f.lanes = 0;
    CHECK_THROWS_AS(build_freeway(f), ConfigError);
    f = {};
    f.cells = 0;
    CHECK_THROWS_AS(build_freeway(f), ConfigError);
    ManhattanParams m;
    m.lanes = 3;
    CHECK_THROWS_AS(build_manhattan(m), ConfigError);
    m = {};
    m.lanes = 10;
    CHECK_THROWS_AS(build_manhattan(m), ConfigError);
}

TEST_CASE("manhattan traffic circulates counterclockwise around the nearest block")
{
    const NetworkLayout m = build_manhattan();
    for (const Lane& lane : m.lanes) {
        const bool vertical = std::abs(std::sin(lane.gamma)) > 0.5;
        for (const auto& ref : m.bs_list) {
            // A lane point level with a block center, then that block's neighbor.
            const double x = vertical ? lane.x0 : ref.x;
            const double y = vertical ? ref.y : lane.y0;
            const BaseStation* best = nullptr;
            double best_d = 1e300;
            for (const auto& bs : m.bs_list) {
                const double d = wrap_distance(m, x, y, 0.0, bs.x, bs.y, 0.0);
                if (d < best_d) {
                    best_d = d;
                    best = &bs;
                }
            }
            const auto [rx, ry] = wrap_delta(m, best->x, best->y, x, y);
            const double cross = rx * std::sin(lane.gamma) - ry * std::cos(lane.gamma);
            CHECK(cross > 0.0);
        }
    }
}

TEST_CASE("VUE drop: density, gaps and directions")
{
    const NetworkLayout f = build_freeway();
    const double v = 33.33;
    double total = 0.0;
    const int drops = 1000;
    std::size_t checked_gaps = 0;
    for (int s = 0; s < drops; ++s) {
        Rng rng(1000 + static_cast<std::uint64_t>(s));
        const auto vues = drop_vues(f, 0.004, v, 0.1, rng);
        total += static_cast<double>(vues.size());
        std::map<std::size_t, std::vector<double>> by_lane;
        for (const auto& u : vues) {
            CHECK(u.gamma == f.lanes[u.lane].gamma);
            CHECK(u.x >= 0.0);
            CHECK(u.x < f.wrap.period_x);
            by_lane[u.lane].push_back(axial(f.lanes[u.lane], u));
        }
        for (auto& [l, pos] : by_lane) {
            std::sort(pos.begin(), pos.end());
            for (std::size_t i = 0; i < pos.size(); ++i) {
                const double next = i + 1 < pos.size() ? pos[i + 1] : pos[0] + f.lanes[l].length;
                if (pos.size() > 1)
                    CHECK(next - pos[i] >= 2.5 * v - 1e-6);
                ++checked_gaps;
            }
        }
    }
    const double expected = 6.0 * 3464.0 * 0.004;
    CHECK(std::abs(total / drops - expected) <= 0.05 * expected);
    CHECK(checked_gaps > 0);
}

TEST_CASE("VUE drop: infeasible and invalid densities")
{
    const NetworkLayout f = build_freeway();
    Rng rng(1);
    CHECK_THROWS_AS(drop_vues(f, 0.0125, 33.33, 0.1, rng), InfeasibleDensity);
    CHECK_THROWS_AS(drop_vues(f, 0.0, 10.0, 0.1, rng), ConfigError);
    CHECK_NOTHROW(drop_vues(build_manhattan(), 0.0125, 25.0, 0.1, rng));
}

TEST_CASE("minimum-image distances")
{
    const NetworkLayout f = build_freeway();
    CHECK(wrap_distance(f, 3460.0, 0.0, 1.5, 0.0, 0.0, 1.5) == Catch::Approx(4.0));
    CHECK(wrap_distance(f, 4.0, 0.0, 1.5, 3464.0 - 4.0, 0.0, 1.5) == Catch::Approx(8.0));
    const auto [dx, dy] = wrap_delta(f, 100.0, 3.0, 1732.0 + 200.0, 7.0);
    CHECK(dx == Catch::Approx(-1632.0));
    CHECK(dy == Catch::Approx(4.0));
    // 3D distance includes the height difference.
    CHECK(wrap_distance(f, f.bs_list[0], 0.0, -35.0) == Catch::Approx(33.5));

    const NetworkLayout m = build_manhattan();
    CHECK(wrap_distance(m, 5.0, 5.0, 0.0, 805.0, 1354.0, 0.0) == Catch::Approx(std::sqrt(200.0)));
}

TEST_CASE("central angles")
{
    const NetworkLayout f = build_freeway();
    Vue u;
    u.x = 3364.0; // 100 m west of BS 0 through the wrap
    u.y = -35.0;
    const auto [phi, theta] = central_angles(f, f.bs_list[0], u);
    CHECK(phi == Catch::Approx(0.0).margin(1e-15));
    CHECK(theta == Catch::Approx(-kPi));

    u.x = 100.0;
    const auto [phi2, theta2] = central_angles(f, f.bs_list[0], u);
    CHECK(phi2 == Catch::Approx(-kPi));
    CHECK(theta2 == Catch::Approx(0.0).margin(1e-15));

    u.x = 30.0;
    u.y = 10.0;
    const auto [phi3, theta3] = central_angles(f, f.bs_list[0], u);
    CHECK(std::abs(std::cos(theta3 - phi3) + 1.0) < 1e-15);
    CHECK(phi3 == Catch::Approx(std::atan2(-45.0, -30.0)));

    u.x = 0.0;
    u.y = -35.0;
    CHECK_THROWS_AS(central_angles(f, f.bs_list[0], u), CoincidentPositions);
}

TEST_CASE("association: ties, nearest BS and shadowing")
{
    const NetworkLayout f = build_freeway();
    std::vector<Vue> vues(3);
    vues[0].x = 866.0; // equidistant
    vues[1].x = 1700.0;
    vues[2].x = 1700.0;
    std::vector<std::vector<double>> shadow{{0.0, 0.0}, {0.0, 0.0}, {80.0, 0.0}};
    const auto s = associate(f, vues, shadow);
    CHECK(s == std::vector<std::size_t>{0, 1, 0});
    shadow.pop_back();
    CHECK_THROWS_AS(associate(f, vues, shadow), ConfigError);
}

TEST_CASE("scenario names round trip")
{
    CHECK(scenario_from_string(to_string(Scenario::Freeway)) == Scenario::Freeway);
    CHECK(scenario_from_string(to_string(Scenario::Manhattan)) == Scenario::Manhattan);
    CHECK_THROWS_AS(scenario_from_string("highway"), ConfigError);
}
