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

#ifndef MUMOR_TOPOLOGY_HPP
#define MUMOR_TOPOLOGY_HPP

#include "mumor/capacity.hpp"
#include "mumor/graph.hpp"
#include "mumor/mor_network.hpp"

#include <map>
#include <string>
#include <vector>

namespace mumor
{
    // Sum-rate upper bounds for networks of K surfaces with M elements each.
    //
    // edge_gain_db is the power gain of one inter-surface edge (0 for lossless,
    // -10 for a 10 dB loss). A path touching g surfaces crosses g - 1 edges, so its
    // per-pair SNR is P M^(2g) 10^(edge_gain_db (g - 1) / 10) / N0.

    // Linear graph: one K-surface chain plus K (M - 1) single-surface side pairs
    double bound_lg(int element_count, int surface_count, const RateParams &params, double edge_gain_db = 0.0);

    struct CgBound
    {
        double bits;
        int total_pairs;
    };

    // Complete graph with an arbitrary mix of path lengths: sum_g N_g log2(1 + SNR_g)
    CgBound bound_cg_general(int element_count, const std::map<int, int> &pairs_per_length,
                             const RateParams &params, double edge_gain_db = 0.0);

    struct CgEqualBound
    {
        double bits;
        int n_tau;           // K (K - 1) / (2 (tau - 1)) paths of tau surfaces
        int supported_pairs; // n_tau, or K M + n_tau (1 - tau) with first-order pairs
    };

    // Complete graph decomposed into equal paths of `tau` surfaces, optionally topped
    // up with first-order pairs on the remaining K M - n_tau tau element slots.
    // Throws DecompositionInfeasibleError unless 2 <= tau <= K and n_tau is an integer.
    CgEqualBound bound_cg_equal(int element_count, int surface_count, int tau, const RateParams &params,
                                bool include_first_order, double edge_gain_db = 0.0);

    // Null graph: K isolated surfaces, K times the single-surface bound
    double bound_ng(int element_count, int surface_count, int pairs_per_surface, const RateParams &params);

    // Edge-disjoint cover of the complete graph by simple paths of tau nodes each
    struct DecompositionPlan
    {
        int node_count;
        int tau;
        std::vector<std::vector<int>> paths;

        int n_tau() const noexcept { return static_cast<int>(paths.size()); }
    };

    // Backtracking exact cover, deterministic for given (K, tau).
    // Throws DecompositionInfeasibleError when the integrality condition fails and
    // SearchExhaustedError if no cover is found.
    DecompositionPlan decompose_complete_graph(int node_count, int tau);

    // One line per path, nodes separated by spaces, after a "# K=.. tau=.. paths=.." header
    std::string to_text(const DecompositionPlan &plan);
    DecompositionPlan plan_from_text(const std::string &text);

    // Linear-graph scenario: a chain transceiver entering surface 0 and leaving
    // surface K-1, every surface MRC-weighted for its chain hop, and optionally
    // `side_pairs_per_surface` first-order pairs per surface at the optimal positions
    // of that hop. max_order = K and paths never revisit a surface.
    struct LgDesign
    {
        int surface_count = 2;
        UlaSurface surface = UlaSurface(4);
        Angle chain_aoa = Angle::degrees(30.0);
        Angle chain_aod = Angle::degrees(135.0);
        Angle hop_departure = Angle::degrees(60.0);
        Angle hop_arrival = Angle::degrees(110.0);
        double hop_distance_m = 100.0;
        double edge_gain_db = 0.0;
        int side_pairs_per_surface = 0;
    };

    NetworkScenario make_lg_scenario(const LgDesign &design);

    struct LgCheck
    {
        Complex chain_gain;            // H(0, 0), the end-to-end chain pair
        double expected_magnitude;     // prod_k M_k l_k * prod_edges amplitude loss
        double relative_error;         // | |chain_gain| - expected | / expected
        double max_chain_side_cross;   // max |H| between chain pair and side pairs, both directions
        double max_side_side_cross;    // max |H| between side pairs of different surfaces (diagnostic)
        ComplexMatrix channel;
    };

    // Evaluates a linear-graph scenario through the full network model with cutoff K.
    // Transceiver 0 must be the chain pair; the others are single-surface side pairs.
    LgCheck lg_channel_check(const NetworkScenario &scenario);
} // namespace mumor

#endif
