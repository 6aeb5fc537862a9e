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
#include <string>
#include <utility>
#include <vector>

#include "vaging/rng.hpp"
#include "vaging/types.hpp"

namespace vaging {

enum class Scenario { Freeway, Manhattan };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

struct BaseStation {
    double x = 0.0;
    double y = 0.0;
    double height = 0.0;
    double alpha = 0.0; // ULA orientation [rad]
};

/// Straight lane centerline that closes on itself through the wrap.
struct Lane {
    double x0 = 0.0;   // start point
    double y0 = 0.0;
    double gamma = 0.0; // travel direction [rad]; the lane runs along it
    double length = 0.0;
    double width = 0.0;

    /// Point at arc length s (not reduced into the wrap).
    std::pair<double, double> at(double s) const;
};

/// Periods of the minimum-image convention; 0 disables an axis.
struct WrapSpec {
    double period_x = 0.0;
    double period_y = 0.0;
};

struct NetworkLayout {
    Scenario scenario = Scenario::Freeway;
    std::vector<BaseStation> bs_list;
    std::vector<Lane> lanes;
    WrapSpec wrap;
    double vue_height = 1.5;

    std::size_t cells() const { return bs_list.size(); }
};

struct FreewayParams {
    std::size_t cells = 2;
    double isd = 1732.0;
    double bs_offset = 35.0; // BS distance from the road edge
    double bs_height = 35.0;
    std::size_t lanes = 6;
    double lane_width = 4.0;
    double vue_height = 1.5;
    double alpha = 0.0;
};

struct ManhattanParams {
    std::size_t blocks_x = 3;
    std::size_t blocks_y = 3;
    double block_x = 250.0;
    double block_y = 433.0;
    double street_width = 20.0;
    std::size_t lanes = 4; // per street, split evenly between the two directions
    double lane_width = 3.5;
    double sidewalk = 3.0;
    double bs_height = 25.0;
    double vue_height = 1.5;
    double alpha = 0.0;
};

/// BSs on one side of a straight road, lanes numbered outward from the BS
/// side; the half of the lanes farther from the BSs drive toward +x.
NetworkLayout build_freeway(const FreewayParams& p = {});

/// BSs at block centers of a torus-wrapped grid with pitch block + street.
/// Traffic circulates counterclockwise around every block.
NetworkLayout build_manhattan(const ManhattanParams& p = {});

struct Vue {
    double x = 0.0;
    double y = 0.0;
    std::size_t lane = 0;
    double gamma = 0.0;
    double v = 0.0;
    double power = 0.1;
};

/// Places VUEs on every lane with headway 2.5 v + Exp so that the long-run
/// density per lane equals `density` [1/m]. The wrap-around gap closing each
/// lane loop also respects the 2.5 v minimum. Throws InfeasibleDensity when
/// 2.5 v exceeds the mean headway 1 / density.
std::vector<Vue> drop_vues(const NetworkLayout& layout, double density, double v, double power,
                           Rng& rng);

/// Minimum-image horizontal offset from a to b.
std::pair<double, double> wrap_delta(const NetworkLayout& layout, double ax, double ay, double bx,
                                     double by);

/// Minimum-image 3D distance between a VUE position and a BS.
double wrap_distance(const NetworkLayout& layout, const BaseStation& bs, double x, double y);
double wrap_distance(const NetworkLayout& layout, double ax, double ay, double ah, double bx,
                     double by, double bh);

/// LOS central directions of a link: phi_c is the azimuth of the BS seen
/// from the VUE, theta_c = phi_c + pi. Throws CoincidentPositions when the two
/// coincide horizontally.
std::pair<double, double> central_angles(const NetworkLayout& layout, const BaseStation& bs,
                                         const Vue& vue);

/// Serving BS per VUE: argmax of received strength (path gain plus shadow,
/// shadow_db[k][b]), ties to the lowest BS index.
std::vector<std::size_t> associate(const NetworkLayout& layout, const std::vector<Vue>& vues,
                                   const std::vector<std::vector<double>>& shadow_db);

} // namespace vaging
