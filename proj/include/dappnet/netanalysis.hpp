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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dappnet/graph.hpp"

namespace dappnet {

/// Undirected simple weighted graph backing the network computations. Nodes
/// are indexed in sorted-name order, adjacency lists are sorted, duplicate
/// edges merge by weight sum and self-loops are dropped; every downstream
/// routine is therefore deterministic for a fixed input.
class AnalysisGraph {
public:
    AnalysisGraph() = default;
    AnalysisGraph(const std::set<std::string>& nodes,
                  const std::map<std::pair<std::string, std::string>, double>& edges);

    static AnalysisGraph from_bipartite(const BipartiteGraph& graph);
    /// Directed projections are symmetrized (weights of opposite arcs sum);
    /// the `symmetrized()` flag records that for reports.
    static AnalysisGraph from_projection(const ProjectedGraph& graph);

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
    int index(const std::string& name) const;

    const std::vector<std::pair<int, double>>& neighbors(int v) const {
        return adj_.at(static_cast<std::size_t>(v));
    }
    /// Edges as (u, v, weight) with u < v, sorted.
    const std::vector<std::tuple<int, int, double>>& edges() const { return edges_; }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    double strength(int v) const;

    bool symmetrized() const { return symmetrized_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<std::tuple<int, int, double>> edges_;
    bool symmetrized_ = false;
};

struct MetricsReport {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::map<int, std::size_t> degree_histogram;

    bool modularity_defined = false;
    double modularity_q = 0.0;
    std::map<std::string, int> communities;

    bool path_metrics_defined = false;  // largest component has >= 2 nodes
    int diameter = 0;
    double avg_path_length = 0.0;
    std::size_t largest_component = 0;

    double avg_clustering = 0.0;
    bool symmetrized_input = false;
};

/// Diameter and average path length by BFS (unweighted hops) over the largest
/// connected component; clustering is the mean local coefficient over all
/// nodes with degree < 2 contributing 0. Includes the seeded community
/// detection result.
MetricsReport summary_metrics(const AnalysisGraph& graph, std::uint64_t seed = 0);

struct BackboneEdge {
    std::string source;
    std::string target;
    double weight = 0.0;
    double significance = 1.0;  // min endpoint alpha_ij; 1.0 if no endpoint judges
};

struct BackboneResult {
    double alpha = 0.0;
    std::vector<BackboneEdge> retained;
    double node_retention = 0.0;  // endpoints of retained edges / all nodes
    double edge_retention = 0.0;
    std::size_t total_nodes = 0;
    std::size_t total_edges = 0;
};

/// Disparity filter. A node i of degree k > 1 assigns each incident edge the
/// significance (1 - w/s_i)^(k-1); an edge survives if either judging
/// endpoint scores below alpha. Degree-1 endpoints never judge; an edge whose
/// endpoints are both degree 1 survives iff keep_degree_one. alpha in (0, 1].
/// Throws std::invalid_argument for non-positive weights (naming the edge)
/// and out-of-range alpha.
BackboneResult disparity_backbone(const AnalysisGraph& graph, double alpha,
                                  bool keep_degree_one = true);

struct ModularityResult {
    bool defined = false;  // false for edgeless graphs
    double q = 0.0;
    std::map<std::string, int> assignment;  // community ids, 0-based
};

/// Greedy multilevel modularity maximization with seeded deterministic node
/// ordering. Edgeless graphs come back undefined with singleton communities.
ModularityResult modularity_communities(const AnalysisGraph& graph, std::uint64_t seed);

/// Q of a given assignment under the standard configuration-model definition.
double modularity_of(const AnalysisGraph& graph,
                     const std::map<std::string, int>& assignment);

/// Exact betweenness over unweighted shortest paths; every unordered node
/// pair is counted once.
std::map<std::string, double> betweenness(const AnalysisGraph& graph);

enum class RemovalStrategy { Targeted, Random };

struct ResilienceCurve {
    RemovalStrategy strategy = RemovalStrategy::Targeted;
    std::uint64_t seed = 0;
    /// (fraction of nodes removed, LCC size / initial LCC size)
    std::vector<std::pair<double, double>> points;
};

/// Removes ceil(step * n) nodes per round until the graph is empty,
/// recording the largest-component fraction after each round. Targeted picks
/// the highest current betweenness (recomputed every round, ties by node-id
/// order); random removes uniformly without replacement under the seed.
ResilienceCurve resilience(const AnalysisGraph& graph, RemovalStrategy strategy,
                           double step_fraction = 0.02, std::uint64_t seed = 0);

}  // namespace dappnet
