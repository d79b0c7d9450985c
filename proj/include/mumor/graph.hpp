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

#ifndef MUMOR_GRAPH_HPP
#define MUMOR_GRAPH_HPP

#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace mumor
{
    enum class GraphKind
    {
        linear,   // LG: path 0 - 1 - ... - (K-1)
        complete, // CG: every pair of surfaces sees each other
        null,     // NG: no inter-surface links
        custom
    };

    std::string_view to_string(GraphKind kind) noexcept;

    // Undirected line-of-sight graph between K surfaces (nodes 0..K-1)
    class NetworkGraph
    {
    public:
        using Edge = std::pair<int, int>; // stored with first < second

        static NetworkGraph linear(int node_count);
        static NetworkGraph complete(int node_count);
        static NetworkGraph null_graph(int node_count);
        static NetworkGraph custom(int node_count, const std::vector<Edge> &edges);

        int node_count() const noexcept { return node_count_; }
        GraphKind kind() const noexcept { return kind_; }
        const std::set<Edge> &edges() const noexcept { return edges_; }
        bool has_edge(int a, int b) const;

    private:
        NetworkGraph(int node_count, GraphKind kind);
        void add_edge(int a, int b);

        int node_count_;
        GraphKind kind_;
        std::set<Edge> edges_;
    };
} // namespace mumor

#endif
