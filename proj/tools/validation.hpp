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

#ifndef MUMOR_VALIDATION_HPP
#define MUMOR_VALIDATION_HPP

#include "mumor/mor_network.hpp"
#include "oracles.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace mumor
{
    // A random far-field network drawn once and expressed both as a library
    // scenario and as plain oracle inputs
    struct RandomNetwork
    {
        NetworkScenario scenario;
        std::vector<oracle::Surface> surfaces;
        std::vector<std::vector<oracle::Link>> edges; // [from][to], amplitude 0 = no link
        std::vector<oracle::Pair> pairs;
    };

    // K surfaces on the complete graph with random sizes, spacings, losses, weights,
    // link angles and N transceivers with random entry/exit surfaces
    RandomNetwork random_network(std::mt19937_64 &gen, int K, int N, int max_order);

    // max |a - b| over max |b|, entrywise
    double max_relative_error(const ComplexMatrix &a, const oracle::Grid &b);

    struct CheckResult
    {
        std::string name;
        bool passed;
        double measured;
        double tolerance;
        std::string detail;
    };

    // Every oracle comparison, seeded
    std::vector<CheckResult> run_validation(std::uint64_t seed);

    void print_checks(const std::vector<CheckResult> &checks, std::ostream &out);
} // namespace mumor

#endif
