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

#include "mumor/mor_network.hpp"

#include <sstream>

namespace mumor
{
    IndexMatrix::IndexMatrix(int order, std::vector<std::vector<int>> rows) : order_(order), rows_(std::move(rows))
    {
        if (order_ < 1)
            throw std::invalid_argument("IndexMatrix: order must be at least 1.");
        for (const auto &row : rows_)
        {
            if (static_cast<int>(row.size()) != order_)
                throw std::invalid_argument("IndexMatrix: every row must have `order` entries.");
            for (std::size_t v = 0; v + 1 < row.size(); ++v)
                if (row[v] == row[v + 1])
                    throw std::invalid_argument("IndexMatrix: adjacent entries of a row must differ.");
        }
    }

    namespace
    {
        void extend(int K, int order, bool allow_revisit, const NetworkGraph &topology, std::vector<int> &prefix,
                    std::vector<bool> &used, std::vector<std::vector<int>> &rows)
        {
            if (static_cast<int>(prefix.size()) == order)
            {
                rows.push_back(prefix);
                return;
            }
            for (int k = 0; k < K; ++k)
            {
                if (!prefix.empty())
                {
                    const int last = prefix.back();
                    if (k == last || !topology.has_edge(last, k))
                        continue;
                }
                if (!allow_revisit && used[k])
                    continue;
                prefix.push_back(k);
                used[k] = true;
                extend(K, order, allow_revisit, topology, prefix, used, rows);
                used[k] = false;
                prefix.pop_back();
            }
        }
    } // namespace

    IndexMatrix index_matrix(int surface_count, int order, bool allow_revisit, const NetworkGraph &topology)
    {
        if (surface_count < 1)
            throw std::invalid_argument("index_matrix: surface_count must be at least 1.");
        if (order < 1)
            throw std::invalid_argument("index_matrix: order must be at least 1.");
        if (topology.node_count() != surface_count)
            throw std::invalid_argument("index_matrix: topology node count differs from surface_count.");

        // Depth-first in increasing index order yields lexicographically sorted rows
        std::vector<std::vector<int>> rows;
        std::vector<int> prefix;
        prefix.reserve(order);
        std::vector<bool> used(surface_count, false);
        extend(surface_count, order, allow_revisit, topology, prefix, used, rows);
        return IndexMatrix(order, std::move(rows));
    }

    IndexMatrix index_matrix(int surface_count, int order, bool allow_revisit)
    {
        return index_matrix(surface_count, order, allow_revisit, NetworkGraph::complete(surface_count));
    }

    NetworkTransceiver NetworkTransceiver::single(int entry_surface, Angle aoa, int exit_surface, Angle aod,
                                                  double power_w)
    {
        return {{{entry_surface, aoa}}, {{exit_surface, aod}}, power_w};
    }

    void NetworkScenario::add_link(int from, int to, const InterIrsLink &link)
    {
        links.insert_or_assign({from, to}, link);
        links.insert_or_assign({to, from}, link.reversed());
    }

    NetworkGraph NetworkScenario::graph() const
    {
        std::vector<NetworkGraph::Edge> edges;
        for (const auto &[key, link] : links)
            edges.push_back(key);
        return NetworkGraph::custom(surface_count(), edges);
    }

    void NetworkScenario::validate() const
    {
        const int K = surface_count();
        if (K < 1)
            throw ModelError("scenario: at least one surface is required.");
        if (max_order < 1)
            throw ModelError("scenario: max_order must be at least 1.");
        if (transceivers.empty())
            throw ModelError("scenario: at least one transceiver is required.");
        if (static_cast<int>(weights.size()) != K)
            throw ModelError("scenario: expected one weight vector per surface.");
        if (!(noise_power_w > 0.0) || !(transmit_power_w >= 0.0))
            throw ModelError("scenario: noise power must be positive and transmit power non-negative.");

        for (int k = 0; k < K; ++k)
            if (weights[k].size() != surfaces[k].element_count())
            {
                std::ostringstream msg;
                msg << "scenario: weights of surface " << k << " have " << weights[k].size()
                    << " entries, surface has " << surfaces[k].element_count() << " elements.";
                throw ModelError(msg.str());
            }

        for (const auto &[key, link] : links)
        {
            const auto [from, to] = key;
            if (from < 0 || to < 0 || from >= K || to >= K || from == to)
            {
                std::ostringstream msg;
                msg << "scenario: link (" << from << ", " << to << ") is invalid.";
                throw ModelError(msg.str());
            }
            auto back = links.find({to, from});
            if (back == links.end())
            {
                std::ostringstream msg;
                msg << "scenario: link (" << from << ", " << to << ") has no reverse link.";
                throw ModelError(msg.str());
            }
            const InterIrsLink &r = back->second;
            if (std::abs(r.departure.rad() - link.arrival.rad()) > 1e-12 ||
                std::abs(r.arrival.rad() - link.departure.rad()) > 1e-12 ||
                std::abs(r.distance_m - link.distance_m) > 1e-12 * link.distance_m ||
                std::abs(r.edge_loss - link.edge_loss) > 1e-15)
            {
                std::ostringstream msg;
                msg << "scenario: links (" << from << ", " << to << ") and (" << to << ", " << from
                    << ") are not mutually reversed.";
                throw ModelError(msg.str());
            }
        }

        for (int n = 0; n < transceiver_count(); ++n)
        {
            const auto &t = transceivers[n];
            if (t.entries.empty() || t.exits.empty())
            {
                std::ostringstream msg;
                msg << "scenario: transceiver " << n << " needs at least one entry and one exit attachment.";
                throw ModelError(msg.str());
            }
            for (const auto *list : {&t.entries, &t.exits})
                for (const auto &a : *list)
                    if (a.surface < 0 || a.surface >= K)
                    {
                        std::ostringstream msg;
                        msg << "scenario: transceiver " << n << " attaches to unknown surface " << a.surface << ".";
                        throw ModelError(msg.str());
                    }
        }
    }

    ComplexMatrix link_channel(const NetworkScenario &scenario, int from, int to)
    {
        auto it = scenario.links.find({from, to});
        if (it == scenario.links.end())
        {
            std::ostringstream msg;
            msg << "no link from surface " << from << " to surface " << to << ".";
            throw ModelError(msg.str());
        }
        const auto &src = scenario.surfaces.at(from);
        const auto &dst = scenario.surfaces.at(to);
        if (scenario.inter_irs_model == InterIrsModel::exact)
            return inter_irs_channel_exact(it->second, src, dst);
        return inter_irs_channel_farfield(it->second, src, dst);
    }

    namespace
    {
        // Per-surface steering matrices: column n holds the sum of the steering
        // vectors of transceiver n's attachments to that surface (zero if none).
        struct SurfaceTerms
        {
            std::vector<ComplexMatrix> inputs;      // A_in,k   (M_k x N)
            std::vector<ComplexMatrix> outputs;     // A_out,k  (M_k x N)
            std::vector<ComplexVector> reflections; // l_k * conj(w_k)
            std::vector<bool> has_input, has_output;
        };

        SurfaceTerms surface_terms(const NetworkScenario &s)
        {
            const int K = s.surface_count();
            const int N = s.transceiver_count();
            SurfaceTerms t;
            for (int k = 0; k < K; ++k)
            {
                const int M = s.surfaces[k].element_count();
                t.inputs.push_back(ComplexMatrix::Zero(M, N));
                t.outputs.push_back(ComplexMatrix::Zero(M, N));
                t.reflections.push_back(s.surfaces[k].path_loss() * s.weights[k].reflection_coefficients());
            }
            t.has_input.assign(K, false);
            t.has_output.assign(K, false);
            for (int n = 0; n < N; ++n)
            {
                for (const auto &a : s.transceivers[n].entries)
                {
                    t.inputs[a.surface].col(n) += steering_vector(a.angle, s.surfaces[a.surface]);
                    t.has_input[a.surface] = true;
                }
                for (const auto &a : s.transceivers[n].exits)
                {
                    t.outputs[a.surface].col(n) += steering_vector(a.angle, s.surfaces[a.surface]);
                    t.has_output[a.surface] = true;
                }
            }
            return t;
        }
    } // namespace

    ComplexMatrix network_channel_order(const NetworkScenario &scenario, int order)
    {
        scenario.validate();
        if (order < 1 || order > scenario.max_order)
        {
            std::ostringstream msg;
            msg << "network_channel_order: order " << order << " outside [1, " << scenario.max_order << "].";
            throw ModelError(msg.str());
        }

        const int K = scenario.surface_count();
        const int N = scenario.transceiver_count();
        const SurfaceTerms terms = surface_terms(scenario);
        const IndexMatrix X = index_matrix(K, order, scenario.allow_revisit, scenario.graph());

        std::map<std::pair<int, int>, ComplexMatrix> link_cache;
        auto link = [&](int from, int to) -> const ComplexMatrix & {
            auto it = link_cache.find({from, to});
            if (it == link_cache.end())
                it = link_cache.emplace(std::pair{from, to}, link_channel(scenario, from, to)).first;
            return it->second;
        };

        ComplexMatrix H = ComplexMatrix::Zero(N, N);
        for (const auto &row : X.rows())
        {
            const int first = row.front();
            const int last = row.back();
            if (!terms.has_input[first] || !terms.has_output[last])
                continue;

            // W_first A_in,first, then W_next E_(prev,next) for every hop
            ComplexMatrix x = terms.reflections[first].asDiagonal() * terms.inputs[first];
            for (std::size_t v = 0; v + 1 < row.size(); ++v)
            {
                const int from = row[v], to = row[v + 1];
                x = terms.reflections[to].asDiagonal() * (link(from, to) * x);
            }
            H.noalias() += terms.outputs[last].transpose() * x;
        }
        return H;
    }

    EffectiveChannel network_channel(const NetworkScenario &scenario)
    {
        scenario.validate();
        EffectiveChannel out;
        out.total = ComplexMatrix::Zero(scenario.transceiver_count(), scenario.transceiver_count());
        for (int order = 1; order <= scenario.max_order; ++order)
        {
            ComplexMatrix h = network_channel_order(scenario, order);
            out.total += h;
            out.orders.emplace(order, std::move(h));
        }
        return out;
    }
} // namespace mumor
