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

#ifndef MUMOR_RNG_HPP
#define MUMOR_RNG_HPP

#include <cstdint>
#include <random>

namespace mumor
{
    // SplitMix64 finalizer
    constexpr std::uint64_t mix64(std::uint64_t x) noexcept
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Independent generator for (seed, stream). Draws for stream i never depend on
    // how many other streams exist or in which order they run, so parallel
    // Monte-Carlo trials stay reproducible.
    inline std::mt19937_64 stream_generator(std::uint64_t seed, std::uint64_t stream) noexcept
    {
        return std::mt19937_64(mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL)));
    }

    // Uniform draw on [0, 1) with 53 random bits, identical on every platform
    inline double uniform01(std::mt19937_64 &gen) noexcept
    {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    }
} // namespace mumor

#endif
