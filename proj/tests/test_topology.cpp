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

#include "mumor/topology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace mumor;

TEST_CASE("graph kinds")
{
    CHECK(NetworkGraph::linear(4).edges().size() == 3);
    CHECK(NetworkGraph::complete(5).edges().size() == 10);
    CHECK(NetworkGraph::null_graph(3).edges().empty());
    CHECK(NetworkGraph::linear(4).has_edge(2, 1));
    CHECK_FALSE(NetworkGraph::linear(4).has_edge(0, 2));
    CHECK(to_string(GraphKind::complete) == "CG");

    const NetworkGraph g = NetworkGraph::custom(3, {{2, 0}, {0, 2}});
    CHECK(g.edges().size() == 1);
    CHECK(g.has_edge(0, 2));
    CHECK_THROWS_AS(NetworkGraph::custom(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkGraph::custom(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(NetworkGraph::linear(0), std::invalid_argument);
}

TEST_CASE("linear-graph bound")
{
    const RateParams unit(1.0, 1.0);
    CHECK(bound_lg(1, 1, unit) == doctest::Approx(1.0));
    CHECK(bound_lg(6, 4, RateParams(0.0, 1.0)) == 0.0);
    const double expected = std::log2(1.0 + std::pow(6.0, 8)) + 20.0 * std::log2(37.0);
    CHECK(bound_lg(6, 4, unit) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(bound_lg(6, 4, unit) == doctest::Approx(124.86).epsilon(1e-3));

    for (double loss : {0.0, -3.0, -10.0})
        for (double snr_db : {-20.0, 0.0, 25.0})
        {
            const RateParams p = RateParams::from_snr_db(snr_db);
            CHECK(bound_lg(6, 8, p, loss) ==
                  doctest::Approx(oracle::bound_lg_hp(6, 8, p.snr(), loss)).epsilon(1e-12));
        }
    CHECK(bound_lg(6, 4, unit, -10.0) < bound_lg(6, 4, unit));
}

TEST_CASE("complete-graph bounds")
{
    const RateParams unit(1.0, 1.0);
    const CgBound g = bound_cg_general(2, {{2, 2}, {3, 1}}, unit);
    CHECK(g.bits == doctest::Approx(14.197).epsilon(1e-4));
    CHECK(g.total_pairs == 3);
    CHECK(bound_cg_general(2, {}, unit).bits == 0.0);
    CHECK(bound_cg_general(6, {{1, 6}}, unit).bits == doctest::Approx(single_irs_bound(6, 6, unit)));
    CHECK_THROWS_AS(bound_cg_general(6, {{1, -1}}, unit), std::invalid_argument);

    const CgEqualBound k6 = bound_cg_equal(6, 6, 4, unit, false);
    CHECK(k6.n_tau == 5);
    CHECK(k6.supported_pairs == 5);
    CHECK_THROWS_AS(bound_cg_equal(6, 6, 5, unit, false), DecompositionInfeasibleError);
    CHECK_THROWS_AS(bound_cg_equal(6, 4, 5, unit, false), DecompositionInfeasibleError);
    CHECK_THROWS_AS(bound_cg_equal(6, 4, 1, unit, false), DecompositionInfeasibleError);

    // Six 2-surface paths plus the remaining 24 - 12 single-surface slots
    const CgEqualBound k4 = bound_cg_equal(6, 4, 2, unit, true);
    CHECK(k4.n_tau == 6);
    CHECK(k4.supported_pairs == 18);
    CHECK(k4.bits == doctest::Approx(6.0 * std::log2(1297.0) + 12.0 * std::log2(37.0)).epsilon(1e-13));

    for (const auto &[K, tau] : {std::pair{4, 2}, {4, 4}, {6, 2}, {6, 4}, {6, 6}, {5, 3}})
        for (bool first : {false, true})
            for (double loss : {0.0, -10.0})
            {
                const RateParams p = RateParams::from_snr_db(7.0);
                const CgEqualBound b = bound_cg_equal(6, K, tau, p, first, loss);
                CHECK(b.bits == doctest::Approx(oracle::bound_cg_equal_hp(6, K, tau, p.snr(), first, loss))
                                    .epsilon(1e-12));
                std::map<int, int> counts{{tau, b.n_tau}};
                if (first)
                    counts[1] = 6 * K - b.n_tau * tau;
                CHECK(bound_cg_general(6, counts, p, loss).bits == doctest::Approx(b.bits).epsilon(1e-13));
            }

    // Too few elements to top up with first-order pairs
    CHECK_THROWS_AS(bound_cg_equal(1, 6, 2, unit, true), BoundUndefinedError);
}

TEST_CASE("null-graph bound")
{
    const RateParams unit(1.0, 1.0);
    CHECK(bound_ng(6, 4, 6, unit) == doctest::Approx(24.0 * std::log2(37.0)));
    CHECK(bound_ng(6, 4, 6, unit) == doctest::Approx(125.02).epsilon(1e-3));
    CHECK(bound_ng(6, 1, 6, unit) == doctest::Approx(single_irs_bound(6, 6, unit)));
    CHECK(bound_ng(6, 8, 6, unit) == 2.0 * bound_ng(6, 4, 6, unit));
    CHECK(bound_ng(6, 4, 6, unit) == doctest::Approx(oracle::bound_ng_hp(6, 4, 6, 1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(bound_ng(6, 4, 7, unit), BoundUndefinedError);
}

TEST_CASE("complete-graph path decompositions")
{
    for (const auto &[K, tau] : {std::pair{4, 2}, {4, 4}, {6, 2}, {6, 4}, {6, 6}, {5, 3}, {7, 4}, {8, 5}, {9, 3}})
    {
        CAPTURE(K);
        CAPTURE(tau);
        const DecompositionPlan plan = decompose_complete_graph(K, tau);
        CHECK(plan.n_tau() == K * (K - 1) / (2 * (tau - 1)));
        CHECK(oracle::check_path_cover(K, tau, plan.paths).empty());
        // Deterministic
        CHECK(decompose_complete_graph(K, tau).paths == plan.paths);
    }
    CHECK(decompose_complete_graph(4, 2).n_tau() == 6);
    CHECK(decompose_complete_graph(6, 6).n_tau() == 3);
    CHECK_THROWS_AS(decompose_complete_graph(6, 5), DecompositionInfeasibleError);
    CHECK_THROWS_AS(decompose_complete_graph(4, 5), DecompositionInfeasibleError);
}

TEST_CASE("decomposition plans round-trip through text")
{
    const DecompositionPlan plan = decompose_complete_graph(6, 4);
    const std::string text = to_text(plan);
    CHECK(text.rfind("# K=6 tau=4 paths=5\n", 0) == 0);
    const DecompositionPlan back = plan_from_text(text);
    CHECK(back.node_count == 6);
    CHECK(back.tau == 4);
    CHECK(back.paths == plan.paths);

    CHECK_THROWS_AS(plan_from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(plan_from_text("# K=4 tau=2 paths=1\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(plan_from_text("# K=4 tau=2 paths=6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(plan_from_text("# K=4 tau=2 paths=6\n0 1\n0 2\n0 3\n1 2\n1 3\n1 2\n"), std::invalid_argument);
}

TEST_CASE("linear-graph scenario through the network model")
{
    SUBCASE("single surface")
    {
        LgDesign d;
        d.surface_count = 1;
        const LgCheck c = lg_channel_check(make_lg_scenario(d));
        CHECK(std::abs(c.chain_gain) == doctest::Approx(4.0).epsilon(1e-12));
    }

    SUBCASE("two lossless surfaces")
    {
        LgDesign d;
        const LgCheck c = lg_channel_check(make_lg_scenario(d));
        CHECK(c.expected_magnitude == doctest::Approx(16.0));
        CHECK(c.relative_error < 1e-9);
        CHECK(std::norm(c.chain_gain) == doctest::Approx(256.0).epsilon(1e-9));
    }

    SUBCASE("10 dB edge loss")
    {
        LgDesign d;
        d.edge_gain_db = -10.0;
        const LgCheck c = lg_channel_check(make_lg_scenario(d));
        CHECK(std::abs(c.chain_gain) == doctest::Approx(16.0 * std::pow(10.0, -0.5)).epsilon(1e-9));
    }

    SUBCASE("side pairs at optimal positions stay orthogonal to the chain")
    {
        for (int K : {2, 3, 4})
        {
            LgDesign d;
            d.surface_count = K;
            d.side_pairs_per_surface = 3;
            const NetworkScenario s = make_lg_scenario(d);
            CHECK(s.transceiver_count() == 1 + 3 * K);
            CHECK(s.max_order == K);
            CHECK(s.graph().edges() == NetworkGraph::linear(K).edges());
            const LgCheck c = lg_channel_check(s);
            CHECK(c.relative_error < 1e-9);
            CHECK(c.max_chain_side_cross < 1e-9 * c.expected_magnitude);
        }
    }

    SUBCASE("rejected scenarios")
    {
        LgDesign d;
        d.surface_count = 3;
        NetworkScenario s = make_lg_scenario(d);
        s.max_order = 2;
        CHECK_THROWS_AS(lg_channel_check(s), ModelError);

        LgDesign too_many;
        too_many.side_pairs_per_surface = 4;
        CHECK_THROWS_AS(make_lg_scenario(too_many), std::invalid_argument);
    }
}
