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

#ifndef MUMOR_EXPERIMENTS_HPP
#define MUMOR_EXPERIMENTS_HPP

#include "mumor/beamforming.hpp"
#include "mumor/mor_network.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mumor
{
    inline constexpr std::string_view kVersion = "0.1.0";

    // Every run_* function spreads its grid cells or trials over `threads` workers and
    // writes each result into its own slot, so the output never depends on the
    // thread count. The write_* functions emit CSV with a unit-bearing header row;
    // the *_metadata functions return the JSON sidecar (config echo, seed, version).

    // --- capacity surface of a second pair next to an MRC-served first pair ---

    struct Fig5Config
    {
        int element_count = 4;
        double relative_length = 2.0; // L = M dr
        Angle fixed_aoa = Angle::degrees(30.0);
        Angle fixed_aod = Angle::degrees(135.0);
        double grid_step_deg = 1.0; // must divide 180
        double snr_db = 10.0;
        int peak_count = 3;
    };

    struct Fig5Peak
    {
        double alpha_deg;
        double beta_deg;
        double capacity_bits;
    };

    struct Fig5Result
    {
        Fig5Config config;
        std::vector<double> grid_deg;  // step, 2 step, ..., 180 - step
        Eigen::MatrixXd capacity_bits; // (alpha index, beta index)
        std::vector<OptimalPosition> analytic;
        std::vector<Fig5Peak> peaks; // strongest local maxima, best first
    };

    // Log-det capacity of {fixed pair, (alpha, beta)} with the weights MRC-matched to
    // the fixed pair, over the grid of interior angles
    Fig5Result run_fig5(const Fig5Config &config, int threads = 1);
    void write_fig5_csv(const Fig5Result &result, std::ostream &out);
    void write_fig5_optima_csv(const Fig5Result &result, std::ostream &out);
    std::string fig5_metadata(const Fig5Result &result, std::uint64_t seed);

    // --- Monte-Carlo comparison of weight designs on one surface ---

    struct Fig6Config
    {
        int pair_count = 4;
        std::vector<int> element_grid{4, 8, 9, 12, 16, 25, 36};
        int trials = 1000;
        std::uint64_t seed = 1;
        bool uniform_in_cos = false; // angles uniform in cos instead of in angle
        double snr_db = 0.0;         // P_T / N0
        double spacing_wavelengths = 0.5;
    };

    struct Quartiles
    {
        double q1;
        double median;
        double q3;
    };

    // Linear-interpolation quantiles of an unsorted sample
    Quartiles quartiles(std::vector<double> sample);

    struct Fig6Row
    {
        int element_count;
        bool feasible; // M >= N^2
        Quartiles random_bits;
        Quartiles random_zf_bits;
        Quartiles lcmv_bits;
        Quartiles phase_only_bits;
        Quartiles lcmv_residual;
        Quartiles phase_only_residual;
    };

    struct Fig6Result
    {
        Fig6Config config;
        std::vector<Fig6Row> rows;
    };

    // N pairs with i.i.d. angles on (0, 180) degrees for trial `trial`
    std::vector<TransceiverPair> fig6_draw_pairs(std::uint64_t seed, std::uint64_t trial, int pair_count,
                                                 bool uniform_in_cos);

    Fig6Result run_fig6(const Fig6Config &config, int threads = 1);
    void write_fig6_csv(const Fig6Result &result, std::ostream &out);
    std::string fig6_metadata(const Fig6Result &result);

    // --- linear-graph vs null-graph bounds ---

    struct Fig7Config
    {
        int element_count = 6;
        std::vector<int> surface_counts{4, 8};
        std::vector<double> snr_db;          // defaults to -30..40 in 1 dB steps
        std::vector<double> edge_loss_db{0.0, 10.0}; // positive = loss per edge

        Fig7Config();
    };

    struct Fig7Row
    {
        int surface_count;
        double edge_loss_db;
        double snr_db;
        double lg_bits;
        double ng_bits;
    };

    struct Fig7Crossover
    {
        int surface_count;
        double edge_loss_db;
        std::optional<double> snr_db; // first grid SNR from which NG stays >= LG
        bool lg_above_below;          // LG > NG on every grid point before it
    };

    struct Fig7Result
    {
        Fig7Config config;
        std::vector<Fig7Row> rows;
        std::vector<Fig7Crossover> crossovers;
    };

    Fig7Result run_fig7(const Fig7Config &config, int threads = 1);
    void write_fig7_csv(const Fig7Result &result, std::ostream &out);
    std::string fig7_metadata(const Fig7Result &result, std::uint64_t seed);

    // --- complete-graph bounds for equal-length path decompositions ---

    struct Fig8Case
    {
        int surface_count;
        int tau;
    };

    struct Fig8Config
    {
        int element_count = 6;
        std::vector<Fig8Case> cases{{4, 2}, {4, 4}, {6, 2}, {6, 4}, {6, 6}};
        std::vector<double> snr_db; // defaults to -30..40 in 1 dB steps
        double edge_loss_db = 0.0;

        Fig8Config();
    };

    struct Fig8Accepted
    {
        Fig8Case c;
        int n_tau;
        std::optional<int> supported_pairs; // with first-order pairs, if the slots suffice
        std::string plan;                   // explicit decomposition, plan text format
    };

    struct Fig8Rejected
    {
        Fig8Case c;
        std::string reason;
    };

    struct Fig8Row
    {
        Fig8Case c;
        int n_tau;
        double snr_db;
        double paths_only_bits;
        std::optional<double> with_first_order_bits;
    };

    struct Fig8Result
    {
        Fig8Config config;
        std::vector<Fig8Accepted> accepted;
        std::vector<Fig8Rejected> rejected;
        std::vector<Fig8Row> rows;
    };

    Fig8Result run_fig8(const Fig8Config &config, int threads = 1);
    void write_fig8_csv(const Fig8Result &result, std::ostream &out);
    std::string fig8_metadata(const Fig8Result &result, std::uint64_t seed);

    // --- arbitrary network scenario ---

    struct ScenarioReport
    {
        EffectiveChannel channel;
        std::vector<double> sinr_bits; // per transceiver, with its own transmit power
        std::vector<double> zf_bits;
        double logdet_bits;
    };

    ScenarioReport evaluate_scenario(const NetworkScenario &scenario);
    void write_scenario_csv(const ScenarioReport &report, std::ostream &out);
    std::string scenario_metadata(const NetworkScenario &scenario, const ScenarioReport &report,
                                  const std::string &config_path, std::uint64_t seed);

    // --- experiment configs from YAML (keys documented in docs/experiments.md) ---
    // Unknown keys and bad values raise ConfigError naming the field.

    Fig5Config fig5_config_from_yaml(const std::string &text);
    Fig6Config fig6_config_from_yaml(const std::string &text);
    Fig7Config fig7_config_from_yaml(const std::string &text);
    Fig8Config fig8_config_from_yaml(const std::string &text);
} // namespace mumor

#endif
