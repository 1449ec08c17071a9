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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "dappnet/extract.hpp"
#include "dappnet/parser.hpp"
#include "dappnet/resolve.hpp"

namespace testsupport {

// ---- golden sources --------------------------------------------------------

// Three-contract corpus mirroring the published worked example: each contract
// holds references to the other two and calls one function on each.
extern const char* kFig2Contract1;
extern const char* kFig2Contract2;
extern const char* kFig2Contract3;

// Self-referential modifier + event example.
extern const char* kOwnable;

// Cast-chain example with negative cases (mul/div/getTotalValue must not
// produce records).
extern const char* kBondCalculator;
extern const char* kIUniswapV2Pair;
extern const char* kIERC20;

// Inherited-event + address(this) example.
extern const char* kERC20;

// ---- in-memory pipeline ----------------------------------------------------

dappnet::SourceUnit parse_source(const std::string& text,
                                 const std::string& path = "test.sol",
                                 dappnet::FileId id = 0);

struct Corpus {
    std::vector<dappnet::SourceUnit> units;
    dappnet::DeclRegistry registry;
    std::vector<dappnet::CallRecord> records;
    std::vector<std::string> warnings;
};

/// Runs tokenize/parse/registry/extract over (path, text) pairs, sorted by
/// path, mirroring the scan pipeline without touching the filesystem.
Corpus run_pipeline(std::vector<std::pair<std::string, std::string>> files);

/// Pipeline over one file named test.sol.
std::vector<dappnet::CallRecord> extract_from(const std::string& text);

/// Compact one-line form for readable golden comparisons:
/// "src.fn -> tgt [a->b] (rule)".
std::string brief(const dappnet::CallRecord& record);
std::vector<std::string> briefs(const std::vector<dappnet::CallRecord>& records);

// ---- AST dump --------------------------------------------------------------

/// S-expression dump used for structural asserts and determinism checks.
std::string dump(const dappnet::Expr& expr);
std::string dump(const dappnet::Stmt& stmt);
std::string dump(const dappnet::SourceUnit& unit);

// ---- filesystem helpers ------------------------------------------------------

class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    TempDir(TempDir&& other) noexcept : path_(std::move(other.path_)) {
        other.path_.clear();
    }

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);

}  // namespace testsupport
