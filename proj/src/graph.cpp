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

#include "mumor/graph.hpp"

#include <stdexcept>
#include <string>

namespace mumor
{
    std::string_view to_string(GraphKind kind) noexcept
    {
        switch (kind)
        {
        case GraphKind::linear:
            return "LG";
        case GraphKind::complete:
            return "CG";
        case GraphKind::null:
            return "NG";
        case GraphKind::custom:
            return "custom";
        }
        return "custom";
    }

    NetworkGraph::NetworkGraph(int node_count, GraphKind kind) : node_count_(node_count), kind_(kind)
    {
        if (node_count_ < 1)
            throw std::invalid_argument("NetworkGraph: node_count must be at least 1.");
    }

    void NetworkGraph::add_edge(int a, int b)
    {
        if (a < 0 || b < 0 || a >= node_count_ || b >= node_count_)
            throw std::invalid_argument("NetworkGraph: edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                        ") references a node outside [0, " + std::to_string(node_count_) + ").");
        if (a == b)
            throw std::invalid_argument("NetworkGraph: self loops are not allowed (node " + std::to_string(a) + ").");
        edges_.insert(a < b ? Edge{a, b} : Edge{b, a});
    }

    NetworkGraph NetworkGraph::linear(int node_count)
    {
        NetworkGraph g(node_count, GraphKind::linear);
        for (int k = 0; k + 1 < node_count; ++k)
            g.add_edge(k, k + 1);
        return g;
    }

    NetworkGraph NetworkGraph::complete(int node_count)
    {
        NetworkGraph g(node_count, GraphKind::complete);
        for (int a = 0; a < node_count; ++a)
            for (int b = a + 1; b < node_count; ++b)
                g.add_edge(a, b);
        return g;
    }

    NetworkGraph NetworkGraph::null_graph(int node_count)
    {
        return NetworkGraph(node_count, GraphKind::null);
    }

    NetworkGraph NetworkGraph::custom(int node_count, const std::vector<Edge> &edges)
    {
        NetworkGraph g(node_count, GraphKind::custom);
        for (const auto &[a, b] : edges)
            g.add_edge(a, b);
        return g;
    }

    bool NetworkGraph::has_edge(int a, int b) const
    {
        return edges_.contains(a < b ? Edge{a, b} : Edge{b, a});
    }
} // namespace mumor
