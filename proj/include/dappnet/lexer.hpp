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

#include <string_view>
#include <vector>

#include "dappnet/token.hpp"

namespace dappnet {

/// True for the fixed Solidity keyword set this toolchain recognizes. Words
/// outside the set (`unchecked`, `constant`, `abstract`, ...) lex as plain
/// identifiers and are handled by lexeme where the parser cares.
bool is_solidity_keyword(std::string_view lexeme);

/// True for elementary (value) type names: bool, string, bytes/bytesN,
/// int/uint with optional width, fixed/ufixed, address, var.
bool is_elementary_type_name(std::string_view name);

/// Splits source text into tokens, discarding comments and whitespace.
///
/// Never requires syntactic validity: unknown bytes come out as single-char
/// punctuation so the concatenation of lexemes plus skipped gaps always
/// reconstructs the input. The only failures are unterminated strings and
/// unterminated block comments, reported as LexError with the position of the
/// opening delimiter. Identical input yields the identical token sequence.
std::vector<Token> tokenize(std::string_view source, FileId file);

}  // namespace dappnet
