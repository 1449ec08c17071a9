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
#include <optional>
#include <string_view>

#include <json.hpp>

#include "dappnet/extract.hpp"
#include "dappnet/graph.hpp"
#include "dappnet/netanalysis.hpp"

namespace dappnet {

enum class AnalysisTarget { Bipartite, Functions, Contracts };

std::optional<AnalysisTarget> parse_analysis_target(std::string_view name);
std::string_view analysis_target_name(AnalysisTarget target);

/// Analysis view of the chosen network (bipartite as-is, projections
/// symmetrized for path metrics).
AnalysisGraph graph_for_target(const std::vector<CallRecord>& records,
                               AnalysisTarget target, const GraphOptions& options);

/// Metrics report JSON; see docs/report-schema.md. Always includes the
/// out-degree histogram of the bipartite A side (distinct contracts called
/// per construct).
nlohmann::json analyze_report(const std::vector<CallRecord>& records,
                              AnalysisTarget target, const GraphOptions& options,
                              std::uint64_t seed = 0);

nlohmann::json backbone_report(const std::vector<CallRecord>& records,
                               AnalysisTarget target, const GraphOptions& options,
                               double alpha, bool keep_degree_one = true);

/// Emits one curve per requested strategy; with std::nullopt both strategies
/// are reported side by side.
nlohmann::json resilience_report(const std::vector<CallRecord>& records,
                                 AnalysisTarget target, const GraphOptions& options,
                                 std::optional<RemovalStrategy> strategy,
                                 double step_fraction, std::uint64_t seed);

}  // namespace dappnet
