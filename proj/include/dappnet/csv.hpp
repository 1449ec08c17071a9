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

#include <string>
#include <string_view>
#include <vector>

#include "dappnet/extract.hpp"

namespace dappnet {

inline constexpr std::string_view kCsvHeader =
    "File,Source Contract,Source Function,Target Contract,Chain";

/// "a->b->c"; empty chain serializes to the empty field.
std::string chain_to_string(const std::vector<std::string>& chain);

/// Header plus one row per record in the given order. Fields containing
/// commas, quotes or newlines are quoted per standard CSV rules; rows end
/// with '\n'. Byte-stable for a fixed record sequence.
std::string to_csv(const std::vector<CallRecord>& records);

/// Reads a CSV produced by to_csv. The header line must match kCsvHeader
/// exactly. The rule/source-kind provenance tags are not stored in the CSV;
/// they are re-inferred coarsely (constructor/Global/External by name) which
/// is sufficient for graph building. Throws std::runtime_error on malformed
/// input.
std::vector<CallRecord> parse_csv(std::string_view text);

}  // namespace dappnet
