// SPDX-License-Identifier: Apache-2.0
//
// mumor: channel modelling and sum-rate bounds for networks of reflecting surfaces
// Copyright (C) 2026 The mumor authors
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

#ifndef MUMOR_SCENARIO_IO_HPP
#define MUMOR_SCENARIO_IO_HPP

#include "mumor/mor_network.hpp"

#include <string>

namespace mumor
{
    // Malformed or inconsistent configuration. The message starts with the
    // offending field, e.g. "surfaces[1].elements: expected a positive integer".
    class ConfigError : public Error
    {
    public:
        ConfigError(const std::string &field, const std::string &problem);
        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    // Parses a YAML scenario (schema in docs/scenario-format.md) and validates it.
    // Model-level inconsistencies are reported as ConfigError as well.
    NetworkScenario parse_scenario(const std::string &yaml_text);

    // Reads and parses a scenario file; I/O failures name the path
    NetworkScenario load_scenario(const std::string &path);

    // Whole file as a string, ConfigError("<path>", ...) when unreadable
    std::string read_text_file(const std::string &path);
} // namespace mumor

#endif
