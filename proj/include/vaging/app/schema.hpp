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

#include <string>
#include <vector>

namespace vaging::app {

/// Column layout of one CSV artifact. Non-numeric columns hold bare tokens.
struct CsvSchema {
    std::string name;
    std::vector<std::string> columns;
    std::vector<bool> numeric;
};

/// Throws ConfigError for an unknown schema name.
const CsvSchema& csv_schema(const std::string& name);
const std::vector<CsvSchema>& csv_schemas();

/// "# vaging schema=<name> schema_version=1 config_hash=<hash> generator=<family>\n"
/// followed by the column header line.
std::string csv_preamble(const std::string& schema, const std::string& config_hash);

/// 17 significant digits, so equal text means equal doubles.
std::string format_double(double x);

struct Validation {
    bool ok = true;
    std::string kind;
    std::vector<std::string> errors;
};

Validation validate_csv_text(const std::string& text);
Validation validate_json_text(const std::string& text);
/// Dispatches on the extension (.csv or .json).
Validation validate_file(const std::string& path);

} // namespace vaging::app
