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
#include <vector>

#include "dappnet/ast.hpp"
#include "dappnet/token.hpp"

namespace dappnet {

class ParseError : public std::runtime_error {
public:
    ParseError(FileId file, int line, int column, const std::string& message)
        : std::runtime_error(message), file(file), line(line), column(column) {}

    FileId file;
    int line;
    int column;
};

/// Builds the per-file AST for one token sequence.
///
/// Top-level contract/interface/library declarations are always recovered
/// with their names and base lists; statements outside the supported subset
/// become Unknown nodes spanning their balanced tokens, and `assembly { .. }`
/// is captured opaque. The only fatal condition is an unbalanced bracket
/// group (ParseError); everything else recovers.
SourceUnit parse_unit(std::vector<Token> tokens, FileId file, std::string path = {});

/// Given tokens[start] is an opener (`{`, `(`, `[`), returns the index one
/// past the matching closer, honoring nesting across all three bracket kinds.
/// Throws ParseError if the stream ends first.
std::size_t skip_balanced(const std::vector<Token>& tokens, std::size_t start);

}  // namespace dappnet
