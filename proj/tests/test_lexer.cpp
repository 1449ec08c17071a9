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

#include <doctest.h>

#include <string>
#include <vector>

#include "dappnet/lexer.hpp"
#include "support.hpp"

using namespace dappnet;

namespace {

std::vector<std::string> lexemes(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const Token& t : tokens) out.push_back(t.lexeme);
    return out;
}

// Round-trip oracle: every lexeme must sit at its recorded offset, offsets
// must be monotone, and for comment-free input the gaps must be pure
// whitespace so lexemes + gaps rebuild the source byte for byte.
void check_round_trip(const std::string& source, bool comment_free) {
    std::vector<Token> tokens = tokenize(source, 0);
    std::size_t cursor = 0;
    std::string rebuilt;
    for (const Token& t : tokens) {
        REQUIRE(t.offset >= cursor);
        REQUIRE(source.compare(t.offset, t.lexeme.size(), t.lexeme) == 0);
        std::string gap = source.substr(cursor, t.offset - cursor);
        if (comment_free) {
            CHECK(gap.find_first_not_of(" \t\r\n\v\f") == std::string::npos);
        }
        rebuilt += gap;
        rebuilt += t.lexeme;
        cursor = t.offset + t.lexeme.size();
    }
    rebuilt += source.substr(cursor);
    if (comment_free) CHECK(rebuilt == source);
}

}  // namespace

TEST_CASE("keyword/identifier split") {
    auto tokens = tokenize("contract Bank {}", 0);
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].kind == TokenKind::Keyword);
    CHECK(tokens[0].lexeme == "contract");
    CHECK(tokens[1].kind == TokenKind::Identifier);
    CHECK(tokens[1].lexeme == "Bank");
    CHECK(tokens[2].is_punct("{"));
    CHECK(tokens[3].is_punct("}"));
}

TEST_CASE("empty input yields empty sequence") {
    CHECK(tokenize("", 0).empty());
    CHECK(tokenize("   \n\t // just a comment\n", 0).empty());
}

TEST_CASE("member call statement") {
    auto tokens = tokenize("contract1.func1();", 0);
    CHECK(lexemes(tokens) ==
          std::vector<std::string>{"contract1", ".", "func1", "(", ")", ";"});
    CHECK(tokens[0].kind == TokenKind::Identifier);
    CHECK(tokens[2].kind == TokenKind::Identifier);
}

TEST_CASE("string literals keep comment-looking content") {
    auto tokens = tokenize("x = \"a // b\";", 0);
    CHECK(lexemes(tokens) == std::vector<std::string>{"x", "=", "\"a // b\"", ";"});
    CHECK(tokens[2].kind == TokenKind::String);
    check_round_trip("x = \"a // b\";", true);
}

TEST_CASE("comments produce no tokens") {
    auto tokens = tokenize("a /* x y */ b // c\n d /** natspec */ e /// doc\nf", 0);
    CHECK(lexemes(tokens) == std::vector<std::string>{"a", "b", "d", "e", "f"});
}

TEST_CASE("multi-character punctuation is one token") {
    auto tokens = tokenize("a == b ** c => d -> e <<= f != g", 0);
    auto lex = lexemes(tokens);
    CHECK(std::count(lex.begin(), lex.end(), "==") == 1);
    CHECK(std::count(lex.begin(), lex.end(), "**") == 1);
    CHECK(std::count(lex.begin(), lex.end(), "=>") == 1);
    CHECK(std::count(lex.begin(), lex.end(), "->") == 1);
    CHECK(std::count(lex.begin(), lex.end(), "<<=") == 1);
    CHECK(std::count(lex.begin(), lex.end(), "!=") == 1);
}

TEST_CASE("positions are 1-based at the lexeme start") {
    auto tokens = tokenize("a\n  bb\n\tccc", 0);
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].line == 1);
    CHECK(tokens[0].column == 1);
    CHECK(tokens[1].line == 2);
    CHECK(tokens[1].column == 3);
    CHECK(tokens[2].line == 3);
    CHECK(tokens[2].column == 2);
}

TEST_CASE("unterminated string is a lexical error with position") {
    try {
        tokenize("x = \"abc\n;", 0);
        FAIL("expected LexError");
    } catch (const LexError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
}

TEST_CASE("unterminated block comment is a lexical error") {
    CHECK_THROWS_AS(tokenize("a /* no close", 0), LexError);
}

TEST_CASE("numbers lex permissively as single tokens") {
    auto tokens = tokenize("0x1F_a 1_000 2.5e18 1e-9 10 ** 2", 0);
    auto lex = lexemes(tokens);
    CHECK(lex == std::vector<std::string>{"0x1F_a", "1_000", "2.5e18", "1e-9", "10",
                                          "**", "2"});
    for (int i : {0, 1, 2, 3, 4, 6}) {
        CHECK(tokens[static_cast<std::size_t>(i)].kind == TokenKind::Number);
    }
}

TEST_CASE("number followed by member does not swallow the dot") {
    auto tokens = tokenize("2.mul(x)", 0);
    CHECK(lexemes(tokens) == std::vector<std::string>{"2", ".", "mul", "(", "x", ")"});
}

TEST_CASE("hex and unicode strings are single string tokens") {
    auto tokens = tokenize("a = hex\"deadbeef\"; b = unicode\"x\";", 0);
    CHECK(tokens[2].kind == TokenKind::String);
    CHECK(tokens[2].lexeme == "hex\"deadbeef\"");
    CHECK(tokens[6].kind == TokenKind::String);
}

TEST_CASE("keyword set matches the fixed list") {
    CHECK(is_solidity_keyword("this"));
    CHECK(is_solidity_keyword("address"));
    CHECK(is_solidity_keyword("require"));
    CHECK(is_solidity_keyword("emit"));
    CHECK_FALSE(is_solidity_keyword("unchecked"));
    CHECK_FALSE(is_solidity_keyword("constant"));
    CHECK_FALSE(is_solidity_keyword("abstract"));
    CHECK_FALSE(is_solidity_keyword("uint256"));

    auto tokens = tokenize("this unchecked address constant", 0);
    CHECK(tokens[0].kind == TokenKind::Keyword);
    CHECK(tokens[1].kind == TokenKind::Identifier);
    CHECK(tokens[2].kind == TokenKind::Keyword);
    CHECK(tokens[3].kind == TokenKind::Identifier);
}

TEST_CASE("elementary type name classifier") {
    for (const char* name : {"bool", "string", "bytes", "bytes32", "uint", "uint256",
                             "int8", "address", "fixed128x18"}) {
        CHECK(is_elementary_type_name(name));
    }
    for (const char* name : {"bytes33", "uint7", "Contract1", "IERC20", "mapping0"}) {
        CHECK_FALSE(is_elementary_type_name(name));
    }
}

TEST_CASE("unknown bytes become single-char tokens, lexing stays total") {
    auto tokens = tokenize("a # b @ \x80 c", 0);
    CHECK(lexemes(tokens).size() == 6);
    check_round_trip("a # b @ \x80 c", true);
}

TEST_CASE("round-trip over the golden fixtures") {
    for (const char* source :
         {testsupport::kFig2Contract3, testsupport::kOwnable, testsupport::kBondCalculator,
          testsupport::kERC20}) {
        check_round_trip(source, false);
    }
    check_round_trip("contract A { function f() public { x = 1 + 2; } }", true);
}

TEST_CASE("round-trip fuzz over generated comment-free inputs") {
    const std::vector<std::string> atoms = {
        "contract", "x",  "{",  "}",  "(",   ")",  ";",  "==", "**",  "->",
        "=>",       "42", "0x1f", "\"s\"", ".", "+", "while", "_a$b", "1e9", "[",
        "]",        ",",  "<",  "<<=",  "uint256",
    };
    const std::vector<std::string> gaps = {" ", "\n", "\t", "  ", "\r\n", ""};
    std::uint64_t state = 99;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int round = 0; round < 200; ++round) {
        std::string text;
        for (int i = 0; i < 40; ++i) {
            text += atoms[next() % atoms.size()];
            text += gaps[next() % gaps.size()];
        }
        check_round_trip(text, true);
    }
}

TEST_CASE("determinism: identical input, identical tokens") {
    std::string source = testsupport::kBondCalculator;
    auto a = tokenize(source, 0);
    auto b = tokenize(source, 0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lexeme == b[i].lexeme);
        CHECK(a[i].kind == b[i].kind);
        CHECK(a[i].line == b[i].line);
        CHECK(a[i].column == b[i].column);
        CHECK(a[i].offset == b[i].offset);
    }
}
