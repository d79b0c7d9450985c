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
#include "mumor/experiments.hpp"
#include "mumor/scenario_io.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace mumor;

namespace
{
    const std::string kConfigs = std::string(MUMOR_SOURCE_DIR) + "/configs/";

    const char *kMinimal = R"(
surfaces:
  - elements: 4
transceivers:
  - entry: {surface: 0, aoa_deg: 30}
    exit: {surface: 0, aod_deg: 135}
)";

    // Field named by the ConfigError thrown for `text`
    std::string error_field(const std::string &text)
    {
        try
        {
            parse_scenario(text);
        }
        catch (const ConfigError &e)
        {
            return e.field();
        }
        return "<no error>";
    }
} // namespace

TEST_CASE("minimal scenario takes the documented defaults")
{
    const NetworkScenario s = parse_scenario(kMinimal);
    CHECK(s.surface_count() == 1);
    CHECK(s.max_order == 1);
    CHECK(s.allow_revisit);
    CHECK(s.inter_irs_model == InterIrsModel::farfield);
    CHECK(s.surfaces[0].spacing_wavelengths() == 0.5);
    CHECK(s.surfaces[0].path_loss() == 1.0);
    CHECK(s.weights[0].values() == ComplexVector::Ones(4));
    CHECK(s.transceivers[0].power_w == 1.0);
    CHECK(s.noise_power_w == 1.0);
}

TEST_CASE("shipped scenario files load")
{
    const NetworkScenario two = load_scenario(kConfigs + "scenario_two_surfaces.yaml");
    CHECK(two.surface_count() == 2);
    CHECK(two.transceiver_count() == 3);
    CHECK(two.max_order == 2);
    CHECK(two.transmit_power_w == doctest::Approx(1.0));
    CHECK(two.transceivers[2].power_w == 0.5);
    CHECK(two.transceivers[2].entries.size() == 2);
    CHECK(two.surfaces[1].path_loss() == doctest::Approx(std::pow(10.0, -1.0 / 20.0)));
    // 3 dB loss per traversal is a power factor of one half
    CHECK(std::norm(two.links.at({0, 1}).edge_loss) == doctest::Approx(std::pow(10.0, -0.3)));
    CHECK(two.links.at({1, 0}).departure.deg() == doctest::Approx(110.0));

    const TransceiverPair hop{Angle::degrees(30.0), Angle::degrees(60.0)};
    const ComplexVector mrc = mrc_weights(hop, two.surfaces[0]).weights.values();
    CHECK((two.weights[0].values() - mrc).cwiseAbs().maxCoeff() < 1e-15);

    const NetworkScenario poses = load_scenario(kConfigs + "scenario_exact_poses.yaml");
    CHECK(poses.inter_irs_model == InterIrsModel::exact);
    const InterIrsLink &l = poses.links.at({1, 0});
    CHECK(l.distance_m == doctest::Approx(5.0));
    CHECK(l.arrival.deg() == doctest::Approx(90.0));
    CHECK(l.departure.deg() == doctest::Approx(90.0));
    CHECK(std::abs(poses.weights[2].values()(2) - Complex(-1.0, 0.0)) < 1e-15);
    CHECK(poses.weights[1].is_unit_modulus());
    CHECK_NOTHROW(network_channel(poses));
}

TEST_CASE("shipped experiment configs load")
{
    const Fig5Config f5 = fig5_config_from_yaml(read_text_file(kConfigs + "fig5.yaml"));
    CHECK(f5.element_count == 4);
    CHECK(f5.fixed_aod.deg() == doctest::Approx(135.0));
    const Fig6Config f6 = fig6_config_from_yaml(read_text_file(kConfigs + "fig6.yaml"));
    CHECK(f6.element_grid.size() == 7);
    CHECK(f6.trials == 1000);
    const Fig7Config f7 = fig7_config_from_yaml(read_text_file(kConfigs + "fig7.yaml"));
    CHECK(f7.snr_db.size() == 71);
    CHECK(f7.snr_db.back() == doctest::Approx(40.0));
    const Fig8Config f8 = fig8_config_from_yaml(read_text_file(kConfigs + "fig8.yaml"));
    CHECK(f8.cases.size() == 6);
    CHECK(f8.cases[4].tau == 5);
}

TEST_CASE("errors name the offending field")
{
    CHECK(error_field("surfaces: [{elements: 0}]\ntransceivers: []") == "surfaces[0].elements");
    CHECK(error_field("surfaces: [{elements: 4, colour: red}]") == "surfaces[0].colour");
    CHECK(error_field("max_order: two") == "max_order");
    CHECK(error_field("inter_irs_model: nearfield") == "inter_irs_model");
    CHECK(error_field(std::string(kMinimal) + "noise_power_w: 0\n") == "noise_power_w");
    CHECK(error_field(std::string(kMinimal) + "transmit_power_w: 1\ntransmit_power_dbm: 30\n") ==
          "transmit_power_dbm");
    CHECK(error_field("surfaces: [{elements: 4}]\ntransceivers:\n  - entry: {surface: 1, aoa_deg: 30}\n"
                      "    exit: {surface: 0, aod_deg: 30}\n") == "transceivers[0].entry.surface");
    CHECK(error_field("surfaces: [{elements: 4}]\ntransceivers:\n  - entry: {surface: 0, aoa_deg: 190}\n"
                      "    exit: {surface: 0, aod_deg: 30}\n") == "transceivers[0].entry.aoa_deg");
    CHECK(error_field("surfaces: [{elements: 4, weights: {phases_deg: [0, 1]}}]") == "surfaces[0].weights.phases_deg");
    CHECK(error_field("surfaces: [{elements: 4, weights: zeros}]") == "surfaces[0].weights");
    CHECK(error_field("surfaces: [{elements: 4}, {elements: 4}]\n"
                      "links: [{from: 0, to: 0, departure_deg: 1, arrival_deg: 1, distance_m: 1}]") == "links[0].to");
    CHECK(error_field("surfaces: [{elements: 4}, {elements: 4}]\n"
                      "links: [{from: 0, to: 1, departure_deg: 1, arrival_deg: 1, distance_m: -1}]") ==
          "links[0].distance_m");
    CHECK(error_field("surfaces: [{elements: 4}, {elements: 4}]\n"
                      "links: [{from: 0, to: 1, from_poses: true, distance_m: 3}]") == "links[0].distance_m");
    CHECK(error_field("surfaces: [{elements: 4}\n").rfind("line ", 0) == 0);
    CHECK_THROWS_AS(load_scenario(kConfigs + "does_not_exist.yaml"), ConfigError);

    try
    {
        parse_scenario("surfaces: [{elements: -3}]");
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(std::string(e.what()) == "surfaces[0].elements: expected a positive element count");
    }
}

TEST_CASE("dBm and linear powers agree")
{
    const NetworkScenario a = parse_scenario(std::string(kMinimal) + "transmit_power_dbm: 20\nnoise_power_dbm: -90\n");
    CHECK(a.transmit_power_w == doctest::Approx(0.1));
    CHECK(a.noise_power_w == doctest::Approx(1e-12));
    CHECK(a.transceivers[0].power_w == doctest::Approx(0.1));
}

TEST_CASE("experiment config errors")
{
    CHECK_THROWS_AS(fig5_config_from_yaml("grid_step_deg: 7"), ConfigError);
    CHECK_THROWS_AS(fig5_config_from_yaml("experiment: fig6"), ConfigError);
    CHECK_THROWS_AS(fig6_config_from_yaml("trials: 0"), ConfigError);
    CHECK_THROWS_AS(fig6_config_from_yaml("elements: []"), ConfigError);
    CHECK_THROWS_AS(fig7_config_from_yaml("snr_db: {from: 5, to: 1, step: 1}"), ConfigError);
    CHECK_THROWS_AS(fig8_config_from_yaml("cases: [[4, 2, 1]]"), ConfigError);
    CHECK_THROWS_AS(fig8_config_from_yaml("typo: 1"), ConfigError);
    CHECK(fig7_config_from_yaml("snr_db: [1, 2.5]").snr_db == std::vector<double>{1.0, 2.5});
    CHECK(fig5_config_from_yaml("").element_count == 4);
}
