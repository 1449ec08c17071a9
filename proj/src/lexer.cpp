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

#include "dappnet/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

namespace dappnet {

FileId FileTable::intern(std::string path) {
    auto it = index_.find(path);
    if (it != index_.end()) return it->second;
    FileId id = static_cast<FileId>(paths_.size());
    index_.emplace(path, id);
    paths_.push_back(std::move(path));
    return id;
}

namespace {

// The fixed keyword set; everything else is an identifier.
constexpr std::array<std::string_view, 41> kKeywords = {
    "address",  "assembly", "calldata",    "catch",    "constructor", "contract",
    "do",       "else",     "emit",        "enum",     "event",       "external",
    "for",      "function", "if",          "import",   "interface",   "internal",
    "is",       "library",  "mapping",     "memory",   "modifier",    "new",
    "override", "payable",  "pragma",      "private",  "public",      "pure",
    "require",  "return",   "returns",     "storage",  "struct",      "this",
    "try",      "using",    "view",        "virtual",  "while",
};

constexpr std::array<std::string_view, 3> kPunct3 = {"<<=", ">>=", "**="};

constexpr std::array<std::string_view, 21> kPunct2 = {
    "**", "==", "!=", "<=", ">=", "&&", "||", "->", "=>", "+=", "-=",
    "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "++", "--",
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool is_hex_digit(char c) { return std::isxdigit(static_cast<unsigned char>(c)); }

struct Cursor {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool eof() const { return pos >= src.size(); }
    char peek(std::size_t k = 0) const {
        return pos + k < src.size() ? src[pos + k] : '\0';
    }
    void advance() {
        if (src[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }
    void advance_n(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) advance();
    }
};

bool parse_width(std::string_view digits, int max) {
    if (digits.empty()) return false;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return false;
    return value >= 1 && value <= max;
}

}  // namespace

bool is_solidity_keyword(std::string_view lexeme) {
    return std::find(kKeywords.begin(), kKeywords.end(), lexeme) != kKeywords.end();
}

bool is_elementary_type_name(std::string_view name) {
    if (name == "bool" || name == "string" || name == "bytes" || name == "byte" ||
        name == "address" || name == "var") {
        return true;
    }
    if (name.starts_with("bytes")) return parse_width(name.substr(5), 32);
    auto int_width = [](std::string_view digits) {
        if (digits.empty()) return true;  // plain int/uint
        if (!parse_width(digits, 256)) return false;
        int value = 0;
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
        return value % 8 == 0;
    };
    if (name.starts_with("uint")) return int_width(name.substr(4));
    if (name.starts_with("int")) return int_width(name.substr(3));
    // fixed/ufixed with optional MxN suffix; lexed permissively
    if (name.starts_with("ufixed") || name.starts_with("fixed")) {
        std::string_view rest = name.substr(name[0] == 'u' ? 6 : 5);
        if (rest.empty()) return true;
        return rest.find('x') != std::string_view::npos;
    }
    return false;
}

std::vector<Token> tokenize(std::string_view source, FileId file) {
    std::vector<Token> out;
    Cursor c{source};

    auto push = [&](TokenKind kind, std::size_t begin, int line, int column) {
        Token t;
        t.kind = kind;
        t.lexeme.assign(source.substr(begin, c.pos - begin));
        t.file = file;
        t.line = line;
        t.column = column;
        t.offset = begin;
        out.push_back(std::move(t));
    };

    // Consumes the quoted remainder of a string literal; `begin` points at
    // the token start (which may be a hex/unicode prefix).
    auto scan_string = [&](char quote, std::size_t begin, int line, int column) {
        c.advance();  // opening quote
        while (true) {
            if (c.eof() || c.peek() == '\n') {
                throw LexError(file, line, column, "unterminated string literal");
            }
            char ch = c.peek();
            if (ch == '\\') {
                c.advance();
                if (!c.eof()) c.advance();
                continue;
            }
            c.advance();
            if (ch == quote) break;
        }
        push(TokenKind::String, begin, line, column);
    };

    while (!c.eof()) {
        char ch = c.peek();

        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' ||
            ch == '\f') {
            c.advance();
            continue;
        }
        if (ch == '/' && c.peek(1) == '/') {
            while (!c.eof() && c.peek() != '\n') c.advance();
            continue;
        }
        if (ch == '/' && c.peek(1) == '*') {
            int line = c.line, column = c.column;
            c.advance_n(2);
            bool closed = false;
            while (!c.eof()) {
                if (c.peek() == '*' && c.peek(1) == '/') {
                    c.advance_n(2);
                    closed = true;
                    break;
                }
                c.advance();
            }
            if (!closed) throw LexError(file, line, column, "unterminated block comment");
            continue;
        }

        std::size_t begin = c.pos;
        int line = c.line, column = c.column;

        if (ch == '"' || ch == '\'') {
            scan_string(ch, begin, line, column);
            continue;
        }

        if (ident_start(ch)) {
            while (!c.eof() && ident_cont(c.peek())) c.advance();
            std::string_view word = source.substr(begin, c.pos - begin);
            // hex"..." / unicode"..." are single string tokens
            if ((word == "hex" || word == "unicode") && !c.eof() &&
                (c.peek() == '"' || c.peek() == '\'')) {
                scan_string(c.peek(), begin, line, column);
                continue;
            }
            push(is_solidity_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                 begin, line, column);
            continue;
        }

        if (is_digit(ch)) {
            if (ch == '0' && (c.peek(1) == 'x' || c.peek(1) == 'X')) {
                c.advance_n(2);
                while (!c.eof() && (is_hex_digit(c.peek()) || c.peek() == '_')) c.advance();
            } else {
                while (!c.eof() && (is_digit(c.peek()) || c.peek() == '_')) c.advance();
                if (c.peek() == '.' && is_digit(c.peek(1))) {
                    c.advance();
                    while (!c.eof() && (is_digit(c.peek()) || c.peek() == '_')) c.advance();
                }
                if ((c.peek() == 'e' || c.peek() == 'E')) {
                    std::size_t k = (c.peek(1) == '+' || c.peek(1) == '-') ? 2 : 1;
                    if (is_digit(c.peek(k))) {
                        c.advance_n(k);
                        while (!c.eof() && is_digit(c.peek())) c.advance();
                    }
                }
            }
            push(TokenKind::Number, begin, line, column);
            continue;
        }

        // punctuation, longest match first; unknown bytes fall through as
        // single-char tokens so lexing stays total
        std::string_view rest = source.substr(c.pos);
        std::size_t len = 1;
        for (auto p : kPunct3) {
            if (rest.starts_with(p)) {
                len = 3;
                break;
            }
        }
        if (len == 1) {
            for (auto p : kPunct2) {
                if (rest.starts_with(p)) {
                    len = 2;
                    break;
                }
            }
        }
        c.advance_n(len);
        push(TokenKind::Punct, begin, line, column);
    }

    return out;
}

}  // namespace dappnet
