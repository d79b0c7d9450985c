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

#include "mumor/array_model.hpp"
#include "mumor/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace mumor;

TEST_CASE("Angle accepts the closed physical range")
{
    CHECK(Angle::degrees(0.0).rad() == 0.0);
    CHECK(Angle::degrees(180.0).rad() == doctest::Approx(kPi));
    CHECK(Angle::degrees(90.0).cos() == doctest::Approx(0.0).epsilon(1e-15));

    // acos/atan2 rounding just outside the range is clamped
    CHECK(Angle::radians(kPi + 1e-13).rad() == kPi);
    CHECK(Angle::radians(-1e-13).rad() == 0.0);

    CHECK_THROWS_AS(Angle::degrees(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(Angle::degrees(180.5), std::invalid_argument);
    CHECK_THROWS_AS(Angle::radians(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(Angle::radians(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("UlaSurface validates its parameters")
{
    const UlaSurface s(8, 0.25, 0.5, 0.01);
    CHECK(s.relative_length() == doctest::Approx(2.0));
    CHECK(s.spacing_m() == doctest::Approx(0.0025));

    CHECK_THROWS_AS(UlaSurface(0), std::invalid_argument);
    CHECK_THROWS_AS(UlaSurface(4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(UlaSurface(4, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(UlaSurface(4, 0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(UlaSurface(4, 0.5, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(UlaSurface(4, 0.5, 1.0, 1.0, Pose{std::nan(""), 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("steering vector entries and broadside")
{
    const UlaSurface s(5, 0.5);
    const ComplexVector broadside = steering_vector(Angle::degrees(90.0), s);
    for (int m = 0; m < 5; ++m)
        CHECK(std::abs(broadside(m) - Complex(1.0, 0.0)) < 1e-15);

    // Endfire at 0 deg with half-wavelength spacing alternates sign
    const ComplexVector endfire = steering_vector(Angle::degrees(0.0), s);
    for (int m = 0; m < 5; ++m)
        CHECK(std::abs(endfire(m) - Complex(m % 2 ? -1.0 : 1.0, 0.0)) < 1e-12);
}

TEST_CASE("steering and combined vectors agree with the reference construction")
{
    auto gen = stream_generator(7, 0);
    for (int t = 0; t < 100; ++t)
    {
        const int M = 1 + static_cast<int>(uniform01(gen) * 32);
        const double dr = 0.1 + uniform01(gen);
        const double l = uniform01(gen);
        const UlaSurface s(M, dr, l);
        const Angle out = Angle::radians(kPi * uniform01(gen));
        const Angle in = Angle::radians(kPi * uniform01(gen));

        const auto ref_out = oracle::steering(out.rad(), M, dr);
        const auto ref_in = oracle::steering(in.rad(), M, dr);
        const ComplexVector a = steering_vector(out, s);
        const ComplexVector c = combined_steering(out, in, s);
        for (int m = 0; m < M; ++m)
        {
            CHECK(std::abs(a(m) - ref_out[m]) < 1e-12);
            CHECK(std::abs(c(m) - l * ref_out[m] * ref_in[m]) < 1e-12);
        }
    }
}

TEST_CASE("beampattern: direct sum matches the closed-form magnitude")
{
    auto gen = stream_generator(11, 0);
    for (int t = 0; t < 500; ++t)
    {
        const int M = 1 + static_cast<int>(uniform01(gen) * 64);
        const UlaSurface s(M, 0.1 + 0.9 * uniform01(gen));
        const double f = -4.0 + 8.0 * uniform01(gen);
        CHECK(std::abs(std::abs(beampattern(f, s)) - beampattern_magnitude_closed_form(f, s)) < 1e-9 * M);
    }

    // Peaks at multiples of 1/dr and nulls at j/L
    const UlaSurface s(4, 0.5);
    CHECK(std::abs(beampattern(0.0, s)) == doctest::Approx(4.0));
    CHECK(std::abs(beampattern(2.0, s)) == doctest::Approx(4.0));
    CHECK(beampattern_magnitude_closed_form(2.0, s) == doctest::Approx(4.0));
    for (int j = 1; j < 4; ++j)
        CHECK(std::abs(beampattern(j / s.relative_length(), s)) < 1e-12);
}
