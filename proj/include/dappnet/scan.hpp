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
#include <filesystem>
#include <string>
#include <vector>

#include "dappnet/extract.hpp"
#include "dappnet/graph.hpp"
#include "dappnet/resolve.hpp"

namespace dappnet {

struct ScanConfig {
    std::vector<std::filesystem::path> roots;
    std::filesystem::path out_dir = ".";
    std::string name;  // DApp name; defaults to the first root's base name
    GraphOptions graph;
    double backbone_alpha = 0.05;
    double resilience_step = 0.02;
    std::uint64_t seed = 0;
    unsigned workers = 0;  // 0 = env DAPPNET_WORKERS, then hardware count
};

struct FileIssue {
    std::string file;
    std::string message;
};

struct ScanReport {
    std::string dapp_name;
    std::size_t files_discovered = 0;
    std::size_t files_scanned = 0;
    std::size_t files_skipped = 0;
    std::size_t contract_count = 0;
    std::size_t record_count = 0;
    double seconds = 0.0;
    std::vector<FileIssue> issues;       // skipped files with their errors
    std::vector<std::string> warnings;   // registry/resolution warnings
};

struct ScanResult {
    std::vector<SourceUnit> units;       // parsed units, file order
    DeclRegistry registry;
    std::vector<CallRecord> records;     // lexicographic file order
    ScanReport report;
};

class ScanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Effective worker count: DAPPNET_WORKERS env override, then the configured
/// value, then hardware concurrency; always >= 1.
unsigned effective_workers(unsigned configured);

/// Discovers .sol files under the config roots (recursively, lexicographic
/// order), runs the lex/parse/extract pipeline with a worker pool, and merges
/// results deterministically: records and warnings come out in file order
/// regardless of worker count. Individual file failures are recorded and
/// skipped; throws ScanError only when no .sol file is discovered.
ScanResult scan_tree(const ScanConfig& config);

std::string format_report(const ScanReport& report);

}  // namespace dappnet
