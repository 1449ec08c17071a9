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

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dappnet/extract.hpp"

namespace dappnet {

/// Defaults reproduce the published example counts: constructor and Global
/// rows are rule outputs kept in the CSV but excluded from the default graph.
struct GraphOptions {
    bool include_constructors = false;
    bool include_global = false;
    bool include_external = true;
};

/// Node set A: contract-qualified constructs ("Contract.func"). Node set B:
/// contract/interface/library names plus the aggregated "External" label.
/// Edge multiplicity counts the records collapsing onto the pair.
struct BipartiteGraph {
    enum class NodeKind { Function, Constructor, Modifier, GlobalPseudo };

    std::map<std::string, NodeKind> nodes_a;
    std::set<std::string> nodes_b;
    std::map<std::pair<std::string, std::string>, int> edges;

    std::size_t node_count() const { return nodes_a.size() + nodes_b.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

std::string_view node_kind_name(BipartiteGraph::NodeKind kind);

BipartiteGraph build_bipartite(const std::vector<CallRecord>& records,
                               const GraphOptions& options = {});

/// One-mode projection. Undirected edges are keyed with the two endpoint
/// names ordered; directed edges keep (source, target).
struct ProjectedGraph {
    bool directed = false;
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, double> edges;
};

/// Function network: nodes are the A side, an edge joins two constructs with
/// weight = number of distinct target contracts they share. Loop-free.
ProjectedGraph project_functions(const BipartiteGraph& bipartite);

/// Contract network: directed, weight = record count source -> target after
/// option filtering. Self-loops allowed (self-calls exist).
ProjectedGraph project_contracts(const std::vector<CallRecord>& records,
                                 const GraphOptions& options = {});

}  // namespace dappnet
