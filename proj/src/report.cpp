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

#include "dappnet/report.hpp"

namespace dappnet {

std::optional<AnalysisTarget> parse_analysis_target(std::string_view name) {
    if (name == "bipartite") return AnalysisTarget::Bipartite;
    if (name == "functions") return AnalysisTarget::Functions;
    if (name == "contracts") return AnalysisTarget::Contracts;
    return std::nullopt;
}

std::string_view analysis_target_name(AnalysisTarget target) {
    switch (target) {
        case AnalysisTarget::Bipartite: return "bipartite";
        case AnalysisTarget::Functions: return "functions";
        case AnalysisTarget::Contracts: return "contracts";
    }
    return "bipartite";
}

AnalysisGraph graph_for_target(const std::vector<CallRecord>& records,
                               AnalysisTarget target, const GraphOptions& options) {
    switch (target) {
        case AnalysisTarget::Bipartite:
            return AnalysisGraph::from_bipartite(build_bipartite(records, options));
        case AnalysisTarget::Functions:
            return AnalysisGraph::from_projection(
                project_functions(build_bipartite(records, options)));
        case AnalysisTarget::Contracts:
            return AnalysisGraph::from_projection(project_contracts(records, options));
    }
    return {};
}

namespace {

nlohmann::json options_json(const GraphOptions& options) {
    return {{"include_constructors", options.include_constructors},
            {"include_global", options.include_global},
            {"include_external", options.include_external}};
}

nlohmann::json histogram_json(const std::map<int, std::size_t>& histogram) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [degree, count] : histogram) {
        out[std::to_string(degree)] = count;
    }
    return out;
}

}  // namespace

nlohmann::json analyze_report(const std::vector<CallRecord>& records,
                              AnalysisTarget target, const GraphOptions& options,
                              std::uint64_t seed) {
    AnalysisGraph graph = graph_for_target(records, target, options);
    MetricsReport metrics = summary_metrics(graph, seed);

    // out-degree of the A side: distinct contracts each construct calls
    BipartiteGraph bipartite = build_bipartite(records, options);
    std::map<std::string, std::set<std::string>> targets_of;
    for (const auto& [edge, mult] : bipartite.edges) {
        (void)mult;
        targets_of[edge.first].insert(edge.second);
    }
    std::map<int, std::size_t> out_degree;
    for (const auto& [a, kind] : bipartite.nodes_a) {
        (void)kind;
        auto it = targets_of.find(a);
        out_degree[it == targets_of.end() ? 0 : static_cast<int>(it->second.size())] += 1;
    }

    nlohmann::json report;
    report["target"] = analysis_target_name(target);
    report["options"] = options_json(options);
    report["nodes"] = metrics.node_count;
    report["edges"] = metrics.edge_count;
    report["degree_histogram"] = histogram_json(metrics.degree_histogram);
    report["out_degree_histogram"] = histogram_json(out_degree);
    report["largest_component"] = metrics.largest_component;
    report["diameter"] =
        metrics.path_metrics_defined ? nlohmann::json(metrics.diameter) : nlohmann::json();
    report["average_path_length"] = metrics.path_metrics_defined
                                        ? nlohmann::json(metrics.avg_path_length)
                                        : nlohmann::json();
    report["average_clustering"] = metrics.avg_clustering;
    report["modularity"] =
        metrics.modularity_defined ? nlohmann::json(metrics.modularity_q) : nlohmann::json();
    report["communities"] = metrics.communities;
    report["symmetrized"] = metrics.symmetrized_input;
    return report;
}

nlohmann::json backbone_report(const std::vector<CallRecord>& records,
                               AnalysisTarget target, const GraphOptions& options,
                               double alpha, bool keep_degree_one) {
    AnalysisGraph graph = graph_for_target(records, target, options);
    BackboneResult result = disparity_backbone(graph, alpha, keep_degree_one);

    nlohmann::json edges = nlohmann::json::array();
    for (const BackboneEdge& e : result.retained) {
        edges.push_back({{"source", e.source},
                         {"target", e.target},
                         {"weight", e.weight},
                         {"significance", e.significance}});
    }
    nlohmann::json report;
    report["target"] = analysis_target_name(target);
    report["alpha"] = result.alpha;
    report["keep_degree_one"] = keep_degree_one;
    report["nodes"] = result.total_nodes;
    report["edges"] = result.total_edges;
    report["retained_edges"] = edges;
    report["edge_retention"] = result.edge_retention;
    report["node_retention"] = result.node_retention;
    return report;
}

nlohmann::json resilience_report(const std::vector<CallRecord>& records,
                                 AnalysisTarget target, const GraphOptions& options,
                                 std::optional<RemovalStrategy> strategy,
                                 double step_fraction, std::uint64_t seed) {
    AnalysisGraph graph = graph_for_target(records, target, options);

    auto curve_json = [&](RemovalStrategy s) {
        ResilienceCurve curve = resilience(graph, s, step_fraction, seed);
        nlohmann::json points = nlohmann::json::array();
        for (const auto& [removed, lcc] : curve.points) {
            points.push_back({removed, lcc});
        }
        nlohmann::json out;
        out["strategy"] = s == RemovalStrategy::Targeted ? "targeted" : "random";
        out["points"] = points;
        if (s == RemovalStrategy::Random) out["seed"] = seed;
        return out;
    };

    nlohmann::json curves = nlohmann::json::array();
    if (!strategy || *strategy == RemovalStrategy::Targeted) {
        curves.push_back(curve_json(RemovalStrategy::Targeted));
    }
    if (!strategy || *strategy == RemovalStrategy::Random) {
        curves.push_back(curve_json(RemovalStrategy::Random));
    }

    nlohmann::json report;
    report["target"] = analysis_target_name(target);
    report["step"] = step_fraction;
    report["seed"] = seed;
    report["curves"] = curves;
    return report;
}

}  // namespace dappnet
