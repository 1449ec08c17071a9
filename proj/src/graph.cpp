//------------------------------------------------------------------------------
//
//   Copyright 2026 the dappnet authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "dappnet/graph.hpp"

#include <algorithm>

namespace dappnet {

std::string_view node_kind_name(BipartiteGraph::NodeKind kind) {
    switch (kind) {
        case BipartiteGraph::NodeKind::Function: return "function";
        case BipartiteGraph::NodeKind::Constructor: return "constructor";
        case BipartiteGraph::NodeKind::Modifier: return "modifier";
        case BipartiteGraph::NodeKind::GlobalPseudo: return "global";
    }
    return "function";
}

namespace {

bool survives(const CallRecord& r, const GraphOptions& options) {
    if (r.source_function == kConstructorName && !options.include_constructors) return false;
    if (r.source_function == kGlobalScope && !options.include_global) return false;
    if (r.target_contract == kExternalTarget && !options.include_external) return false;
    return true;
}

BipartiteGraph::NodeKind node_kind(const CallRecord& r) {
    if (r.source_function == kConstructorName) return BipartiteGraph::NodeKind::Constructor;
    if (r.source_function == kGlobalScope) return BipartiteGraph::NodeKind::GlobalPseudo;
    if (r.source_kind == CallRecord::SourceKind::Modifier)
        return BipartiteGraph::NodeKind::Modifier;
    return BipartiteGraph::NodeKind::Function;
}

}  // namespace

BipartiteGraph build_bipartite(const std::vector<CallRecord>& records,
                               const GraphOptions& options) {
    BipartiteGraph graph;
    for (const CallRecord& r : records) {
        if (!survives(r, options)) continue;
        std::string a = r.source_contract + "." + r.source_function;
        graph.nodes_a.emplace(a, node_kind(r));
        graph.nodes_b.insert(r.target_contract);
        graph.edges[{std::move(a), r.target_contract}] += 1;
    }
    return graph;
}

ProjectedGraph project_functions(const BipartiteGraph& bipartite) {
    ProjectedGraph projection;
    projection.directed = false;
    for (const auto& [name, kind] : bipartite.nodes_a) projection.nodes.insert(name);

    // shared-target co-membership: for every B node, each unordered pair of
    // its A neighbors gains one unit of weight
    std::map<std::string, std::vector<std::string>> by_target;
    for (const auto& [edge, mult] : bipartite.edges) {
        (void)mult;
        by_target[edge.second].push_back(edge.first);
    }
    for (auto& [target, members] : by_target) {
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                projection.edges[{members[i], members[j]}] += 1.0;
            }
        }
    }
    return projection;
}

ProjectedGraph project_contracts(const std::vector<CallRecord>& records,
                                 const GraphOptions& options) {
    ProjectedGraph projection;
    projection.directed = true;
    for (const CallRecord& r : records) {
        if (!survives(r, options)) continue;
        projection.nodes.insert(r.source_contract);
        projection.nodes.insert(r.target_contract);
        projection.edges[{r.source_contract, r.target_contract}] += 1.0;
    }
    return projection;
}

}  // namespace dappnet
