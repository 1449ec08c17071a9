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

#include "dappnet/export.hpp"

#include <json.hpp>

namespace dappnet {

std::optional<ExportFormat> parse_export_format(std::string_view name) {
    if (name == "graphml") return ExportFormat::GraphML;
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json-edges") return ExportFormat::JsonEdges;
    return std::nullopt;
}

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string dot_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_graphml(const BipartiteGraph& g) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"d0\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d1\" for=\"edge\" attr.name=\"multiplicity\" attr.type=\"int\"/>\n";
    out += "  <graph id=\"G\" edgedefault=\"directed\">\n";
    for (const auto& [name, kind] : g.nodes_a) {
        out += "    <node id=\"" + xml_escape(name) + "\"><data key=\"d0\">";
        out += node_kind_name(kind);
        out += "</data></node>\n";
    }
    for (const std::string& name : g.nodes_b) {
        out += "    <node id=\"" + xml_escape(name) + "\"><data key=\"d0\">";
        out += name == kExternalTarget ? "external" : "contract";
        out += "</data></node>\n";
    }
    for (const auto& [edge, mult] : g.edges) {
        out += "    <edge source=\"" + xml_escape(edge.first) + "\" target=\"" +
               xml_escape(edge.second) + "\"><data key=\"d1\">" + std::to_string(mult) +
               "</data></edge>\n";
    }
    out += "  </graph>\n";
    out += "</graphml>\n";
    return out;
}

std::string to_dot(const BipartiteGraph& g) {
    std::string out = "digraph dapp {\n";
    for (const auto& [name, kind] : g.nodes_a) {
        (void)kind;
        out += "  " + dot_quote(name) + " [shape=ellipse];\n";
    }
    for (const std::string& name : g.nodes_b) {
        out += "  " + dot_quote(name) + " [shape=box];\n";
    }
    for (const auto& [edge, mult] : g.edges) {
        out += "  " + dot_quote(edge.first) + " -> " + dot_quote(edge.second) +
               " [label=" + std::to_string(mult) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string to_json_edges(const BipartiteGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [edge, mult] : g.edges) {
        edges.push_back({{"source", edge.first},
                         {"target", edge.second},
                         {"weight", mult}});
    }
    return edges.dump(2) + "\n";
}

}  // namespace

std::string export_bipartite(const BipartiteGraph& graph, ExportFormat format) {
    switch (format) {
        case ExportFormat::GraphML: return to_graphml(graph);
        case ExportFormat::Dot: return to_dot(graph);
        case ExportFormat::JsonEdges: return to_json_edges(graph);
    }
    return {};
}

}  // namespace dappnet
