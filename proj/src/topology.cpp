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
#include "mumor/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace mumor
{
    namespace
    {
        // log2(1 + SNR) of one pair whose path touches `length` surfaces
        double path_rate(int element_count, int length, const RateParams &params, double edge_gain_db)
        {
            const double power_gain = std::pow(static_cast<double>(element_count), 2.0 * length) *
                                      db_to_power(edge_gain_db * (length - 1));
            return std::log2(1.0 + params.snr() * power_gain);
        }

        void require_positive(int value, const char *what)
        {
            if (value < 1)
                throw std::invalid_argument(std::string(what) + " must be at least 1.");
        }
    } // namespace

    double bound_lg(int element_count, int surface_count, const RateParams &params, double edge_gain_db)
    {
        require_positive(element_count, "bound_lg: element_count");
        require_positive(surface_count, "bound_lg: surface_count");
        const int side_pairs = surface_count * (element_count - 1);
        return path_rate(element_count, surface_count, params, edge_gain_db) +
               side_pairs * path_rate(element_count, 1, params, edge_gain_db);
    }

    CgBound bound_cg_general(int element_count, const std::map<int, int> &pairs_per_length,
                             const RateParams &params, double edge_gain_db)
    {
        require_positive(element_count, "bound_cg_general: element_count");
        CgBound out{0.0, 0};
        for (const auto &[length, count] : pairs_per_length)
        {
            if (length < 1 || count < 0)
                throw std::invalid_argument("bound_cg_general: path lengths must be >= 1 and counts >= 0.");
            out.bits += count * path_rate(element_count, length, params, edge_gain_db);
            out.total_pairs += count;
        }
        return out;
    }

    namespace
    {
        // n_tau = K (K - 1) / (2 (tau - 1)), or throws
        int equal_path_count(int K, int tau)
        {
            std::ostringstream msg;
            if (K < 2 || tau < 2 || tau > K)
            {
                msg << "complete graph with K=" << K << " has no decomposition into paths of " << tau
                    << " nodes (need 2 <= tau <= K).";
                throw DecompositionInfeasibleError(msg.str());
            }
            const int edges = K * (K - 1) / 2;
            if (edges % (tau - 1) != 0)
            {
                msg << "complete graph with K=" << K << " has " << edges << " edges, not divisible into paths of "
                    << tau - 1 << " edges.";
                throw DecompositionInfeasibleError(msg.str());
            }
            return edges / (tau - 1);
        }
    } // namespace

    CgEqualBound bound_cg_equal(int element_count, int surface_count, int tau, const RateParams &params,
                                bool include_first_order, double edge_gain_db)
    {
        require_positive(element_count, "bound_cg_equal: element_count");
        const int n_tau = equal_path_count(surface_count, tau);
        CgEqualBound out{n_tau * path_rate(element_count, tau, params, edge_gain_db), n_tau, n_tau};
        if (include_first_order)
        {
            const int slots = surface_count * element_count - n_tau * tau;
            if (slots < 0)
            {
                std::ostringstream msg;
                msg << "bound_cg_equal: " << n_tau << " paths of " << tau << " surfaces need more than the "
                    << surface_count * element_count << " available element slots.";
                throw BoundUndefinedError(msg.str());
            }
            out.bits += slots * path_rate(element_count, 1, params, edge_gain_db);
            out.supported_pairs = surface_count * element_count + n_tau * (1 - tau);
        }
        return out;
    }

    double bound_ng(int element_count, int surface_count, int pairs_per_surface, const RateParams &params)
    {
        require_positive(surface_count, "bound_ng: surface_count");
        return surface_count * single_irs_bound(element_count, pairs_per_surface, params);
    }

    namespace
    {
        class PathCover
        {
        public:
            PathCover(int K, int tau) : K_(K), tau_(tau), free_(K, std::vector<bool>(K, true)), degree_(K, K - 1)
            {
                for (int a = 0; a < K; ++a)
                    free_[a][a] = false;
                remaining_ = K * (K - 1) / 2;
            }

            bool solve()
            {
                if (remaining_ == 0)
                    return true;

                // Most constrained edge: endpoint with the smallest remaining degree,
                // then its lowest-numbered free neighbour
                int a = -1;
                for (int v = 0; v < K_; ++v)
                    if (degree_[v] > 0 && (a < 0 || degree_[v] < degree_[a]))
                        a = v;
                int b = 0;
                while (!free_[a][b])
                    ++b;

                std::vector<std::vector<int>> candidates;
                collect_paths_through(a, b, candidates);
                for (const auto &path : candidates)
                {
                    take(path, false);
                    paths_.push_back(path);
                    if (solve())
                        return true;
                    paths_.pop_back();
                    take(path, true);
                }
                return false;
            }

            const std::vector<std::vector<int>> &paths() const { return paths_; }

        private:
            void take(const std::vector<int> &path, bool restore)
            {
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                {
                    const int u = path[i], v = path[i + 1];
                    free_[u][v] = free_[v][u] = restore;
                    const int d = restore ? 1 : -1;
                    degree_[u] += d;
                    degree_[v] += d;
                    remaining_ += d;
                }
            }

            // Simple walks of `steps` free edges from `from`, avoiding nodes in `visited`
            void walks(int from, int steps, std::vector<bool> &visited, std::vector<int> &walk,
                       std::vector<std::vector<int>> &out) const
            {
                if (steps == 0)
                {
                    out.push_back(walk);
                    return;
                }
                for (int next = 0; next < K_; ++next)
                {
                    if (!free_[from][next] || visited[next])
                        continue;
                    visited[next] = true;
                    walk.push_back(next);
                    walks(next, steps - 1, visited, walk, out);
                    walk.pop_back();
                    visited[next] = false;
                }
            }

            // Every simple path of tau - 1 free edges that uses the edge (a, b), oriented a -> b
            void collect_paths_through(int a, int b, std::vector<std::vector<int>> &out) const
            {
                const int extra = tau_ - 2;
                for (int left = 0; left <= extra; ++left)
                {
                    std::vector<bool> visited(K_, false);
                    visited[a] = visited[b] = true;
                    std::vector<int> walk;
                    std::vector<std::vector<int>> left_walks;
                    walks(a, left, visited, walk, left_walks);
                    for (const auto &lw : left_walks)
                    {
                        std::vector<bool> used(K_, false);
                        used[a] = used[b] = true;
                        for (int v : lw)
                            used[v] = true;
                        std::vector<std::vector<int>> right_walks;
                        walk.clear();
                        walks(b, extra - left, used, walk, right_walks);
                        for (const auto &rw : right_walks)
                        {
                            std::vector<int> path(lw.rbegin(), lw.rend());
                            path.push_back(a);
                            path.push_back(b);
                            path.insert(path.end(), rw.begin(), rw.end());
                            out.push_back(std::move(path));
                        }
                    }
                }
            }

            int K_, tau_;
            std::vector<std::vector<bool>> free_;
            std::vector<int> degree_;
            int remaining_;
            std::vector<std::vector<int>> paths_;
        };
    } // namespace

    DecompositionPlan decompose_complete_graph(int node_count, int tau)
    {
        const int n_tau = equal_path_count(node_count, tau);
        PathCover cover(node_count, tau);
        if (!cover.solve())
        {
            std::ostringstream msg;
            msg << "decompose_complete_graph: no cover of K=" << node_count << " by paths of " << tau
                << " nodes found although the integrality condition holds.";
            throw SearchExhaustedError(msg.str());
        }
        DecompositionPlan plan{node_count, tau, cover.paths()};
        if (plan.n_tau() != n_tau)
            throw SearchExhaustedError("decompose_complete_graph: cover has an unexpected number of paths.");
        return plan;
    }

    std::string to_text(const DecompositionPlan &plan)
    {
        std::ostringstream out;
        out << "# K=" << plan.node_count << " tau=" << plan.tau << " paths=" << plan.n_tau() << "\n";
        for (const auto &path : plan.paths)
        {
            for (std::size_t i = 0; i < path.size(); ++i)
                out << (i ? " " : "") << path[i];
            out << "\n";
        }
        return out.str();
    }

    DecompositionPlan plan_from_text(const std::string &text)
    {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("plan_from_text: empty input.");

        DecompositionPlan plan{0, 0, {}};
        int declared = -1;
        if (std::sscanf(line.c_str(), "# K=%d tau=%d paths=%d", &plan.node_count, &plan.tau, &declared) != 3)
            throw std::invalid_argument("plan_from_text: malformed header '" + line + "'.");

        std::set<std::pair<int, int>> used;
        int line_no = 1;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            std::istringstream row(line);
            std::vector<int> path;
            int v;
            while (row >> v)
                path.push_back(v);
            if (!row.eof() || static_cast<int>(path.size()) != plan.tau)
                throw std::invalid_argument("plan_from_text: line " + std::to_string(line_no) + " is not a path of " +
                                            std::to_string(plan.tau) + " nodes.");
            for (int node : path)
                if (node < 0 || node >= plan.node_count)
                    throw std::invalid_argument("plan_from_text: line " + std::to_string(line_no) +
                                                " references an unknown node.");
            for (std::size_t i = 1; i < path.size(); ++i)
            {
                const auto edge = std::minmax(path[i - 1], path[i]);
                if (edge.first == edge.second || !used.insert(edge).second)
                    throw std::invalid_argument("plan_from_text: line " + std::to_string(line_no) +
                                                " repeats an edge or a node.");
            }
            plan.paths.push_back(std::move(path));
        }
        const int edges = plan.node_count * (plan.node_count - 1) / 2;
        if (plan.tau < 2 || plan.n_tau() * (plan.tau - 1) != edges)
            throw std::invalid_argument("plan_from_text: paths do not cover every edge of the complete graph.");
        if (plan.n_tau() != declared)
            throw std::invalid_argument("plan_from_text: header declares " + std::to_string(declared) +
                                        " paths, found " + std::to_string(plan.n_tau()) + ".");
        return plan;
    }

    NetworkScenario make_lg_scenario(const LgDesign &design)
    {
        const int K = design.surface_count;
        if (K < 1)
            throw std::invalid_argument("make_lg_scenario: surface_count must be at least 1.");
        if (design.side_pairs_per_surface < 0)
            throw std::invalid_argument("make_lg_scenario: side_pairs_per_surface must be non-negative.");

        NetworkScenario s;
        s.max_order = K;
        // Bounces back along the line would couple the side pairs to the chain
        s.allow_revisit = false;
        s.surfaces.assign(K, design.surface);
        for (int k = 0; k + 1 < K; ++k)
            s.add_link(k, k + 1, {design.hop_departure, design.hop_arrival, design.hop_distance_m,
                                  db_to_amplitude(design.edge_gain_db)});

        s.transceivers.push_back(NetworkTransceiver::single(0, design.chain_aoa, K - 1, design.chain_aod));
        for (int k = 0; k < K; ++k)
        {
            // The chain enters surface k from the Tx or the previous surface and
            // leaves toward the next surface or the Rx
            const TransceiverPair hop{k == 0 ? design.chain_aoa : design.hop_arrival,
                                      k == K - 1 ? design.chain_aod : design.hop_departure};
            s.weights.push_back(mrc_weights(hop, s.surfaces[k]).weights);

            if (design.side_pairs_per_surface == 0)
                continue;
            const auto positions = optimal_positions(hop, s.surfaces[k]);
            if (static_cast<int>(positions.size()) < design.side_pairs_per_surface)
            {
                std::ostringstream msg;
                msg << "make_lg_scenario: surface " << k << " offers only " << positions.size()
                    << " optimal side positions.";
                throw std::invalid_argument(msg.str());
            }
            for (int p = 0; p < design.side_pairs_per_surface; ++p)
                s.transceivers.push_back(NetworkTransceiver::single(k, positions[p].aoa, k, positions[p].aod));
        }
        return s;
    }

    LgCheck lg_channel_check(const NetworkScenario &scenario)
    {
        scenario.validate();
        const int K = scenario.surface_count();
        const NetworkGraph g = scenario.graph();
        const NetworkGraph line = NetworkGraph::linear(K);
        if (g.edges() != line.edges())
            throw ModelError("lg_channel_check: scenario links do not form the linear graph 0 - 1 - ... - (K-1).");
        if (scenario.max_order != K)
            throw ModelError("lg_channel_check: max_order must equal the number of surfaces.");
        const auto &chain = scenario.transceivers.front();
        if (chain.entries.size() != 1 || chain.exits.size() != 1 || chain.entries[0].surface != 0 ||
            chain.exits[0].surface != K - 1)
            throw ModelError("lg_channel_check: transceiver 0 must enter at surface 0 and leave at surface K-1.");

        LgCheck out;
        out.channel = network_channel(scenario).total;
        out.chain_gain = out.channel(0, 0);

        double expected = 1.0;
        for (int k = 0; k < K; ++k)
            expected *= scenario.surfaces[k].element_count() * scenario.surfaces[k].path_loss();
        for (int k = 0; k + 1 < K; ++k)
            expected *= scenario.links.at({k, k + 1}).edge_loss;
        out.expected_magnitude = expected;
        out.relative_error = expected > 0.0 ? std::abs(std::abs(out.chain_gain) - expected) / expected
                                            : std::abs(out.chain_gain);

        out.max_chain_side_cross = 0.0;
        out.max_side_side_cross = 0.0;
        const int N = scenario.transceiver_count();
        for (int n = 1; n < N; ++n)
        {
            out.max_chain_side_cross =
                std::max({out.max_chain_side_cross, std::abs(out.channel(0, n)), std::abs(out.channel(n, 0))});
            for (int m = 1; m < N; ++m)
                if (m != n && scenario.transceivers[m].entries[0].surface != scenario.transceivers[n].entries[0].surface)
                    out.max_side_side_cross = std::max(out.max_side_side_cross, std::abs(out.channel(n, m)));
        }
        return out;
    }
} // namespace mumor
