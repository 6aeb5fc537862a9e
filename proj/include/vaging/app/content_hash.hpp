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
#include <string_view>

namespace vaging::app {

/// SHA-1 of "blob <size>\0<content>", the object id git assigns to a file
/// with this content. Lower-case hex, 40 characters.
std::string git_blob_hash(std::string_view content);

} // namespace vaging::app
