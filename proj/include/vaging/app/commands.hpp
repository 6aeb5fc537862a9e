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
#include <iosfwd>
#include <string>

#include "vaging/app/config.hpp"

namespace vaging::app {

struct CommandOptions {
    std::string out_dir = ".";
    std::size_t threads = 1;
    bool resume = false;
    std::string input; // copt-fit: sweep or samples CSV; delta-ase: fit JSON
    std::ostream* log = nullptr; // progress messages; nullptr silences them
};

/// Content hash of the canonical config text.
std::string config_hash(const RunConfig& cfg);

void cmd_stcc(const RunConfig& cfg, const CommandOptions& opt);
void cmd_se(const RunConfig& cfg, const CommandOptions& opt);
void cmd_ase_sweep(const RunConfig& cfg, const CommandOptions& opt);
void cmd_copt_fit(const RunConfig& cfg, const CommandOptions& opt);
void cmd_delta_ase(const RunConfig& cfg, const CommandOptions& opt);
void cmd_layout_dump(const RunConfig& cfg, const CommandOptions& opt);

} // namespace vaging::app
