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

#include "mumor/beamforming.hpp"
#include "mumor/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace mumor;

namespace
{
    Complex gain(const WeightVector &w, const TransceiverPair &p, const UlaSurface &s)
    {
        return w.values().dot(combined_steering(p.aod, p.aoa, s));
    }

    std::vector<TransceiverPair> random_pairs(std::mt19937_64 &gen, int N)
    {
        std::vector<TransceiverPair> pairs;
        for (int n = 0; n < N; ++n)
            pairs.push_back({Angle::radians(kPi * uniform01(gen)), Angle::radians(kPi * uniform01(gen))});
        return pairs;
    }

    double median(std::vector<double> v)
    {
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    }
} // namespace

TEST_CASE("MRC weights")
{
    const UlaSurface s(8, 0.5);
    const MrcDesign broadside = mrc_weights({Angle::degrees(90.0), Angle::degrees(90.0)}, s);
    CHECK(std::abs(broadside.zeta) < 1e-15);
    CHECK((broadside.weights.values() - ComplexVector::Ones(8)).cwiseAbs().maxCoeff() < 1e-12);

    const TransceiverPair p{Angle::degrees(30.0), Angle::degrees(135.0)};
    const MrcDesign d = mrc_weights(p, s);
    CHECK(d.offset == 0);
    CHECK(d.zeta == doctest::Approx(-0.158919).epsilon(1e-5));
    CHECK(d.weights.is_unit_modulus());
    CHECK(std::abs(gain(d.weights, p, s)) == doctest::Approx(8.0).epsilon(1e-12));

    const MrcDesign shifted = mrc_weights(p, s, 1);
    CHECK(shifted.zeta == doctest::Approx(d.zeta + 2.0));
    CHECK(std::abs(gain(shifted.weights, p, s)) == doctest::Approx(8.0).epsilon(1e-12));

    const UlaSurface lossy(5, 0.37, 0.6);
    auto gen = stream_generator(31, 0);
    for (const auto &q : random_pairs(gen, 200))
        CHECK(std::abs(gain(mrc_weights(q, lossy).weights, q, lossy)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("optimal positions for the 30/135 pair")
{
    const TransceiverPair fixed{Angle::degrees(30.0), Angle::degrees(135.0)};
    const auto pos = optimal_positions(fixed, UlaSurface(4, 0.5));
    REQUIRE(pos.size() == 3);
    const double expected[3][2] = {{129.34, 37.54}, {97.70, 72.97}, {68.53, 101.95}};
    for (int i = 0; i < 3; ++i)
    {
        CHECK(std::abs(pos[i].aoa.deg() - expected[i][0]) < 0.05);
        CHECK(std::abs(pos[i].aod.deg() - expected[i][1]) < 0.05);
    }

    // Same L with many more elements keeps the positions
    const auto dense = optimal_positions(fixed, UlaSurface(64, 2.0 / 64));
    REQUIRE(dense.size() == 3);
    for (int i = 0; i < 3; ++i)
    {
        CHECK(dense[i].aoa.deg() == doctest::Approx(pos[i].aoa.deg()).epsilon(1e-9));
        CHECK(dense[i].aod.deg() == doctest::Approx(pos[i].aod.deg()).epsilon(1e-9));
    }

    CHECK(optimal_positions(fixed, UlaSurface(8, 0.5)).size() == 7);
    CHECK(optimal_positions(fixed, UlaSurface(1, 0.5)).empty());
}

TEST_CASE("optimal positions reuse the MRC weights and are mutually nulled")
{
    auto gen = stream_generator(32, 0);
    for (int t = 0; t < 100; ++t)
    {
        const int M = 2 + static_cast<int>(uniform01(gen) * 10);
        const UlaSurface s(M, 0.3 + 0.4 * uniform01(gen));
        const TransceiverPair fixed = random_pairs(gen, 1)[0];
        const WeightVector w = mrc_weights(fixed, s).weights;
        const auto positions = optimal_positions(fixed, s);
        for (const auto &p : positions)
        {
            const TransceiverPair q{p.aoa, p.aod};
            CHECK(std::abs(gain(w, q, s)) == doctest::Approx(M).epsilon(1e-9));
            CHECK(std::abs(gain(w, {fixed.aoa, p.aod}, s)) < 1e-9 * M);
            CHECK(std::abs(gain(w, {p.aoa, fixed.aod}, s)) < 1e-9 * M);
        }

        const auto searched = oracle::searched_positions(fixed.aoa.rad(), fixed.aod.rad(), M,
                                                         s.spacing_wavelengths());
        CHECK(searched.size() == positions.size());
    }
}

TEST_CASE("interference-free weights")
{
    auto gen = stream_generator(33, 0);

    SUBCASE("one pair gives the MRC direction")
    {
        const UlaSurface s(6, 0.5);
        const auto pairs = random_pairs(gen, 1);
        const auto sol = interference_free_weights(pairs, s);
        CHECK(sol.feasible);
        CHECK(sol.residual < 1e-10);
        const ComplexVector mrc = mrc_weights(pairs[0], s).weights.values();
        const double cosine = std::abs(mrc.dot(sol.weights.values())) / (mrc.norm() * sol.weights.values().norm());
        CHECK(cosine == doctest::Approx(1.0).epsilon(1e-12));
        const ComplexVector unit = sol.weights.values() / sol.weights.values().cwiseAbs().maxCoeff();
        CHECK(std::abs(gain(WeightVector(unit), pairs[0], s)) == doctest::Approx(6.0).epsilon(1e-9));
    }

    SUBCASE("two pairs on four elements")
    {
        const UlaSurface s(4, 0.5);
        for (int t = 0; t < 50; ++t)
        {
            const auto pairs = random_pairs(gen, 2);
            const auto sol = interference_free_weights(pairs, s);
            CHECK(sol.feasible);
            CHECK(sol.residual < 1e-10);
            const ComplexVector f = ComplexVector::Constant(2, Complex(4.0, 0.0));
            CHECK(constraint_residual(sol.weights, pairs, s, f) == doctest::Approx(sol.residual).epsilon(1e-6));
        }
    }

    SUBCASE("four pairs on nine elements leave residual interference")
    {
        const UlaSurface s(9, 0.5);
        std::vector<double> residuals;
        for (int t = 0; t < 100; ++t)
        {
            const auto sol = lcmv_solve(random_pairs(gen, 4), s);
            CHECK_FALSE(sol.feasible);
            residuals.push_back(sol.residual);
        }
        CHECK(median(residuals) > 1e-3);
    }

    SUBCASE("duplicated pairs are degenerate")
    {
        const UlaSurface s(16, 0.5);
        auto pairs = random_pairs(gen, 4);
        pairs[3] = pairs[1];
        CHECK_THROWS_AS(interference_free_weights(pairs, s), RankDeficientError);
        CHECK_NOTHROW(lcmv_solve(pairs, s));
    }

    SUBCASE("bad inputs")
    {
        const UlaSurface s(4, 0.5);
        CHECK_THROWS_AS(lcmv_solve(std::span<const TransceiverPair>{}, s), DimensionError);
        const auto pairs = random_pairs(gen, 2);
        CHECK_THROWS_AS(lcmv_solve(pairs, s, ComplexVector::Ones(3)), DimensionError);
    }
}

TEST_CASE("phase-only projection keeps phases and unit modulus")
{
    auto gen = stream_generator(34, 0);
    const UlaSurface s(16, 0.5);
    const auto pairs = random_pairs(gen, 3);
    const auto sol = lcmv_solve(pairs, s);
    const auto proj = phase_only_projection(sol, pairs, s);
    CHECK(proj.weights.is_unit_modulus());
    CHECK(proj.residual_before == doctest::Approx(sol.residual));
    for (Eigen::Index m = 0; m < 16; ++m)
        if (std::abs(sol.weights.values()(m)) > 1e-9)
            CHECK(std::abs(std::arg(proj.weights.values()(m) / sol.weights.values()(m))) < 1e-9);
    const ComplexVector f = ComplexVector::Constant(3, Complex(16.0, 0.0));
    CHECK(constraint_residual(proj.weights, pairs, s, f) == doctest::Approx(proj.residual_after));
}

TEST_CASE("zero-forcing decoding")
{
    const double M = 4.0;
    const ComplexMatrix diag = M * M * ComplexMatrix::Identity(3, 3);
    for (double r : zf_decode(diag, 2.0, 3.0))
        CHECK(r == doctest::Approx(std::log2(1.0 + 3.0 * std::pow(M, 4) / 2.0)));

    for (double r : zf_decode(ComplexMatrix::Zero(3, 3), 1.0, 1.0))
        CHECK(r == 0.0);

    auto gen = stream_generator(35, 0);
    for (int t = 0; t < 100; ++t)
    {
        oracle::Grid g(2, std::vector<oracle::cplx>(2));
        ComplexMatrix H(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                H(r, c) = g[r][c] = {2.0 * uniform01(gen) - 1.0, 2.0 * uniform01(gen) - 1.0};
        const auto [r0, r1] = oracle::zf_rates_2x2(g, 5.0, 0.5);
        const auto rates = zf_decode(H, 0.5, 5.0);
        CHECK(rates[0] == doctest::Approx(r0).epsilon(1e-10));
        CHECK(rates[1] == doctest::Approx(r1).epsilon(1e-10));
    }

    // Rank one: only one stream survives the pseudo-inverse, and never with full SNR
    ComplexMatrix rank_one(2, 2);
    rank_one << 1.0, 1.0, 1.0, 1.0;
    const auto rates = zf_decode(rank_one, 1.0, 1.0);
    for (double r : rates)
        CHECK(r >= 0.0);
    CHECK(rates[0] < std::log2(1.0 + 4.0));

    CHECK_THROWS_AS(zf_decode(ComplexMatrix::Ones(2, 3), 1.0, 1.0), DimensionError);
}

TEST_CASE("random weights")
{
    const WeightVector a = random_weights(32, 5), b = random_weights(32, 5), c = random_weights(32, 6);
    CHECK(a.is_unit_modulus());
    CHECK((a.values() - b.values()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.values() - c.values()).cwiseAbs().maxCoeff() > 0.1);
}
