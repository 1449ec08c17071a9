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

#include <optional>
#include <string>
#include <string_view>

#include "dappnet/graph.hpp"

namespace dappnet {

enum class ExportFormat { GraphML, Dot, JsonEdges };

std::optional<ExportFormat> parse_export_format(std::string_view name);

/// Serializes the bipartite graph. GraphML carries a `kind` node attribute
/// and a `multiplicity` edge attribute; DOT renders A-nodes as ellipses and
/// B-nodes as boxes; json-edges is a list of {source, target, weight}
/// objects. Output ordering is sorted, so all formats are byte-stable for a
/// fixed graph.
std::string export_bipartite(const BipartiteGraph& graph, ExportFormat format);

}  // namespace dappnet
