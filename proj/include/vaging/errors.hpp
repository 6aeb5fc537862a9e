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

#include <stdexcept>
#include <string>

namespace vaging {

// Invalid user input or configuration. Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Failures of the numerical machinery. Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPsdError : public NumericError {
public:
    using NumericError::NumericError;
};

class SolveFailure : public NumericError {
public:
    using NumericError::NumericError;
};

class RankDeficient : public NumericError {
public:
    using NumericError::NumericError;
};

class ZeroVector : public DomainError {
public:
    using DomainError::DomainError;
};

class InfeasibleDensity : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class CoincidentPositions : public DomainError {
public:
    using DomainError::DomainError;
};

class EmptyCurve : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace vaging
