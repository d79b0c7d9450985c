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

#include "mumor/experiments.hpp"
#include "mumor/scenario_io.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace mumor;

namespace
{
    template <typename Writer>
    std::string render(Writer &&w)
    {
        std::ostringstream out;
        w(out);
        return out.str();
    }

    std::string first_line(const std::string &s)
    {
        return s.substr(0, s.find('\n'));
    }
} // namespace

TEST_CASE("quartiles interpolate linearly")
{
    const Quartiles q = quartiles({4.0, 1.0, 3.0, 2.0});
    CHECK(q.q1 == doctest::Approx(1.75));
    CHECK(q.median == doctest::Approx(2.5));
    CHECK(q.q3 == doctest::Approx(3.25));
    const Quartiles one = quartiles({7.0});
    CHECK(one.q1 == 7.0);
    CHECK(one.q3 == 7.0);
    CHECK(std::isnan(quartiles({}).median));
}

TEST_CASE("fig5 grid, optima and peaks")
{
    Fig5Config c;
    c.grid_step_deg = 2.0;
    const Fig5Result r = run_fig5(c, 2);
    CHECK(r.grid_deg.size() == 89);
    CHECK(r.grid_deg.front() == 2.0);
    CHECK(r.grid_deg.back() == 178.0);
    CHECK(r.capacity_bits.rows() == 89);
    CHECK(r.analytic.size() == 3);
    REQUIRE(r.peaks.size() == 3);
    for (std::size_t i = 1; i < r.peaks.size(); ++i)
        CHECK(r.peaks[i].capacity_bits <= r.peaks[i - 1].capacity_bits);
    CHECK((r.capacity_bits.array() >= 0.0).all());

    const std::string csv = render([&](std::ostream &o) { write_fig5_csv(r, o); });
    CHECK(first_line(csv) == "alpha_deg,beta_deg,capacity_bits");
    const std::string optima = render([&](std::ostream &o) { write_fig5_optima_csv(r, o); });
    CHECK(first_line(optima) == "kind,alpha_deg,beta_deg,null_index,capacity_bits");
    CHECK(fig5_metadata(r, 1).find("\"experiment\"") != std::string::npos);

    // Wider array: more nulls
    Fig5Config wide = c;
    wide.element_count = 8;
    wide.relative_length = 4.0;
    wide.peak_count = 0;
    CHECK(run_fig5(wide).analytic.size() == 7);

    c.grid_step_deg = 7.0;
    CHECK_THROWS_AS(run_fig5(c), std::invalid_argument);
}

TEST_CASE("fig6 is reproducible and thread-count independent")
{
    Fig6Config c;
    c.element_grid = {4, 16};
    c.trials = 40;
    const Fig6Result a = run_fig6(c, 1);
    const Fig6Result b = run_fig6(c, 4);
    const std::string ca = render([&](std::ostream &o) { write_fig6_csv(a, o); });
    CHECK(ca == render([&](std::ostream &o) { write_fig6_csv(b, o); }));
    CHECK(fig6_metadata(a) == fig6_metadata(b));
    CHECK(first_line(ca) == "elements,feasible,random_q1_bits,random_median_bits,random_q3_bits,random_zf_q1_bits,"
                            "random_zf_median_bits,random_zf_q3_bits,lcmv_q1_bits,lcmv_median_bits,lcmv_q3_bits,"
                            "phase_only_q1_bits,phase_only_median_bits,phase_only_q3_bits,lcmv_residual_q1_linear,"
                            "lcmv_residual_median_linear,lcmv_residual_q3_linear,phase_only_residual_q1_linear,"
                            "phase_only_residual_median_linear,phase_only_residual_q3_linear");

    CHECK_FALSE(a.rows[0].feasible);
    CHECK(a.rows[1].feasible);
    CHECK(a.rows[0].lcmv_residual.median > 1e-2);
    CHECK(a.rows[1].lcmv_residual.median < 1e-8);

    Fig6Config other = c;
    other.seed = 2;
    CHECK(ca != render([&](std::ostream &o) { write_fig6_csv(run_fig6(other), o); }));

    const auto p1 = fig6_draw_pairs(1, 3, 4, false), p2 = fig6_draw_pairs(1, 3, 4, false);
    for (int i = 0; i < 4; ++i)
    {
        CHECK(p1[i].aoa == p2[i].aoa);
        CHECK(p1[i].aoa.rad() > 0.0);
        CHECK(p1[i].aod.rad() < kPi);
    }
}

TEST_CASE("fig6 with one pair is interference-free for every scheme")
{
    Fig6Config c;
    c.pair_count = 1;
    c.element_grid = {1, 4, 9};
    c.trials = 30;
    const Fig6Result r = run_fig6(c);
    for (const auto &row : r.rows)
    {
        CHECK(row.feasible);
        CHECK(row.lcmv_residual.q3 < 1e-9);
        // No interference: ZF decoding changes nothing
        CHECK(row.random_zf_bits.median == doctest::Approx(row.random_bits.median).epsilon(1e-9));
    }
}

TEST_CASE("fig7 rows and crossovers")
{
    Fig7Config c;
    const Fig7Result r = run_fig7(c, 3);
    CHECK(r.rows.size() == 2 * 2 * 71);
    CHECK(r.crossovers.size() == 4);
    const std::string csv = render([&](std::ostream &o) { write_fig7_csv(r, o); });
    CHECK(first_line(csv) == "surfaces,edge_loss_db,snr_db,lg_bound_bits,ng_bound_bits");

    for (const auto &row : r.rows)
        if (row.surface_count == 8)
            for (const auto &other : r.rows)
                if (other.surface_count == 4 && other.snr_db == row.snr_db && other.edge_loss_db == row.edge_loss_db)
                    CHECK(row.ng_bits >= other.ng_bits);

    for (const auto &x : r.crossovers)
        if (x.edge_loss_db == 0.0)
        {
            REQUIRE(x.snr_db.has_value());
            CHECK(x.lg_above_below);
            CHECK(*x.snr_db > -30.0);
        }
}

TEST_CASE("fig8 accepts and rejects cases")
{
    Fig8Config c;
    c.cases = {{4, 2}, {6, 4}, {6, 5}, {6, 6}};
    c.snr_db = {0.0, 20.0, 40.0};
    const Fig8Result r = run_fig8(c);
    REQUIRE(r.accepted.size() == 3);
    REQUIRE(r.rejected.size() == 1);
    CHECK(r.rejected[0].c.tau == 5);
    CHECK_FALSE(r.rejected[0].reason.empty());
    CHECK(r.accepted[1].n_tau == 5);
    CHECK(r.accepted[2].n_tau == 3);
    CHECK(r.accepted[1].plan.rfind("# K=6 tau=4 paths=5", 0) == 0);
    CHECK(r.rows.size() == 9);
    const std::string csv = render([&](std::ostream &o) { write_fig8_csv(r, o); });
    CHECK(first_line(csv) == "surfaces,tau,n_tau,snr_db,paths_only_bits,with_first_order_bits");
    CHECK(fig8_metadata(r, 1).find("rejected") != std::string::npos);
}

TEST_CASE("scenario evaluation")
{
    const NetworkScenario s = parse_scenario(R"(
surfaces:
  - elements: 4
    weights: {mrc: {aoa_deg: 30, aod_deg: 135}}
transceivers:
  - entry: {surface: 0, aoa_deg: 30}
    exit: {surface: 0, aod_deg: 135}
    power_w: 4
)");
    const ScenarioReport rep = evaluate_scenario(s);
    // Power 4 enters the rates, not the reported channel
    CHECK(std::abs(rep.channel.total(0, 0)) == doctest::Approx(4.0));
    CHECK(rep.sinr_bits[0] == doctest::Approx(std::log2(65.0)));
    CHECK(rep.logdet_bits == doctest::Approx(std::log2(65.0)));
    CHECK(rep.zf_bits[0] == doctest::Approx(std::log2(65.0)));
    const std::string csv = render([&](std::ostream &o) { write_scenario_csv(rep, o); });
    CHECK(first_line(csv) == "rx_index,tx_index,real_linear,imag_linear,gain_db");
    CHECK(scenario_metadata(s, rep, "inline", 1).find("\"logdet\"") != std::string::npos);
}
