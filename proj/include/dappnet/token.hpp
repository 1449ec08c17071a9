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
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dappnet {

/// Index into a FileTable. Tokens and AST nodes carry this instead of a path
/// so they stay cheap to copy.
using FileId = std::uint32_t;

/// Interned table of scanned file paths.
class FileTable {
public:
    FileId intern(std::string path);
    const std::string& path(FileId id) const { return paths_.at(id); }
    std::size_t size() const { return paths_.size(); }

private:
    std::vector<std::string> paths_;
    std::unordered_map<std::string, FileId> index_;
};

enum class TokenKind {
    Keyword,
    Identifier,
    Number,
    String,
    Punct,
};

struct Token {
    TokenKind kind = TokenKind::Punct;
    std::string lexeme;
    FileId file = 0;
    int line = 1;            // 1-based, first character of the lexeme
    int column = 1;          // 1-based byte column
    std::size_t offset = 0;  // byte offset of the lexeme in the source buffer

    bool is_keyword(std::string_view kw) const {
        return kind == TokenKind::Keyword && lexeme == kw;
    }
    bool is_punct(std::string_view p) const {
        return kind == TokenKind::Punct && lexeme == p;
    }
    bool is_identifier(std::string_view name) const {
        return kind == TokenKind::Identifier && lexeme == name;
    }
};

/// Raised for unterminated strings and block comments. Aborts the scan of the
/// offending file only; a batch scan records the issue and moves on.
class LexError : public std::runtime_error {
public:
    LexError(FileId file, int line, int column, const std::string& message)
        : std::runtime_error(message), file(file), line(line), column(column) {}

    FileId file;
    int line;
    int column;
};

}  // namespace dappnet
