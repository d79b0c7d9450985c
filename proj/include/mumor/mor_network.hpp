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

#ifndef MUMOR_MOR_NETWORK_HPP
#define MUMOR_MOR_NETWORK_HPP

#include "mumor/graph.hpp"
#include "mumor/irs_channel.hpp"

#include <map>
#include <utility>
#include <vector>

namespace mumor
{
    // Surface-index sequences (0-based) of every cascaded path of one reflection order.
    // Adjacent entries always differ; rows are unique and sorted lexicographically.
    class IndexMatrix
    {
    public:
        IndexMatrix(int order, std::vector<std::vector<int>> rows);

        int order() const noexcept { return order_; }
        std::size_t row_count() const noexcept { return rows_.size(); }
        const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }
        const std::vector<int> &row(std::size_t u) const { return rows_.at(u); }

    private:
        int order_;
        std::vector<std::vector<int>> rows_;
    };

    // All length-`order` sequences over [0, K) whose consecutive entries are
    // edges of `topology`. Without revisits every entry must also be distinct,
    // giving P(K, order) rows on the complete graph instead of K (K-1)^(order-1).
    IndexMatrix index_matrix(int surface_count, int order, bool allow_revisit, const NetworkGraph &topology);
    IndexMatrix index_matrix(int surface_count, int order, bool allow_revisit = true);

    // Where a transmitter injects into (or a receiver collects from) the network
    struct Attachment
    {
        int surface;
        Angle angle; // AOA for an entry, AOD for an exit
    };

    struct NetworkTransceiver
    {
        std::vector<Attachment> entries;
        std::vector<Attachment> exits;
        double power_w = 1.0;

        static NetworkTransceiver single(int entry_surface, Angle aoa, int exit_surface, Angle aod,
                                         double power_w = 1.0);
    };

    enum class InterIrsModel
    {
        farfield,
        exact
    };

    struct NetworkScenario
    {
        std::vector<UlaSurface> surfaces;
        std::map<std::pair<int, int>, InterIrsLink> links; // directed, (from, to)
        std::vector<NetworkTransceiver> transceivers;
        std::vector<WeightVector> weights; // one per surface
        int max_order = 1;
        bool allow_revisit = true;
        double transmit_power_w = 1.0;
        double noise_power_w = 1.0;
        InterIrsModel inter_irs_model = InterIrsModel::farfield;

        int surface_count() const noexcept { return static_cast<int>(surfaces.size()); }
        int transceiver_count() const noexcept { return static_cast<int>(transceivers.size()); }

        // Inserts the link and its reverse (arrival and departure swapped)
        void add_link(int from, int to, const InterIrsLink &link);

        // Undirected topology implied by the links
        NetworkGraph graph() const;

        // Throws ModelError describing the first violated invariant
        void validate() const;
    };

    struct EffectiveChannel
    {
        ComplexMatrix total;                  // N x N, rows = receivers, columns = transmitters
        std::map<int, ComplexMatrix> orders; // order -> contribution of that order
    };

    // Channel matrix E of the directed link, using the scenario's inter-surface model
    ComplexMatrix link_channel(const NetworkScenario &scenario, int from, int to);

    // Contribution of all cascaded paths that touch exactly `order` surfaces
    ComplexMatrix network_channel_order(const NetworkScenario &scenario, int order);

    // Sum of the contributions of orders 1..max_order
    EffectiveChannel network_channel(const NetworkScenario &scenario);
} // namespace mumor

#endif
