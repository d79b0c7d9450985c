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

// Private helpers: YAML nodes that remember their dotted path for error messages

#ifndef MUMOR_SCENARIO_YAML_HPP
#define MUMOR_SCENARIO_YAML_HPP

#include "mumor/scenario_io.hpp"

#include <yaml-cpp/yaml.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace mumor::yaml
{
    struct Field
    {
        YAML::Node node;
        std::string path;

        Field at(const std::string &key) const;
        Field at(std::size_t index) const;
        bool has(const std::string &key) const;

        void require_map() const;
        std::size_t require_sequence() const;
        void reject_unknown(std::initializer_list<const char *> known) const;

        double real() const;
        double real_or(double fallback) const;
        long long integer() const;
        long long integer_or(long long fallback) const;
        bool boolean_or(bool fallback) const;
        std::string text() const;
        Angle angle_deg() const;
        std::vector<double> reals() const;
        std::vector<long long> integers() const;
    };

    // Root table of a document; an empty document is an empty table
    Field parse_document(const std::string &text);
} // namespace mumor::yaml

#endif
