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

#include "dappnet/parser.hpp"

#include <array>
#include <cassert>

#include "dappnet/lexer.hpp"

namespace dappnet {

std::size_t skip_balanced(const std::vector<Token>& tokens, std::size_t start) {
    assert(start < tokens.size());
    auto is_opener = [](const Token& t) {
        return t.is_punct("{") || t.is_punct("(") || t.is_punct("[");
    };
    auto is_closer = [](const Token& t) {
        return t.is_punct("}") || t.is_punct(")") || t.is_punct("]");
    };
    assert(is_opener(tokens[start]));

    // Brackets of the three kinds share one depth counter; tolerant of
    // mismatched kinds inside recovered garbage.
    int depth = 0;
    for (std::size_t i = start; i < tokens.size(); ++i) {
        if (is_opener(tokens[i])) {
            ++depth;
        } else if (is_closer(tokens[i])) {
            --depth;
            if (depth == 0) return i + 1;
        }
    }
    const Token& open = tokens[start];
    throw ParseError(open.file, open.line, open.column,
                     "unbalanced '" + open.lexeme + "'");
}

namespace {

// Internal signal for backtracking / statement recovery. Never escapes
// parse_unit.
struct LocalFail {};

constexpr std::array<std::string_view, 11> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
};

constexpr std::array<std::string_view, 11> kNumberUnits = {
    "wei",   "gwei",    "szabo", "finney", "ether", "seconds",
    "minutes", "hours", "days",  "weeks",  "years",
};

bool is_number_unit(const Token& t) {
    if (t.kind != TokenKind::Identifier) return false;
    for (auto u : kNumberUnits)
        if (t.lexeme == u) return true;
    return false;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, FileId file, std::string path)
        : toks_(std::move(tokens)), file_(file), path_(std::move(path)) {}

    SourceUnit run() {
        check_brace_balance();

        SourceUnit unit;
        unit.file = file_;
        unit.path = path_;

        while (!eof()) {
            if (at_keyword("pragma")) {
                parse_pragma(unit);
            } else if (at_keyword("import")) {
                parse_import(unit);
            } else if (at_top_decl_head()) {
                std::size_t start = pos_;
                try {
                    unit.declarations.push_back(parse_top_decl());
                } catch (const LocalFail&) {
                    // step past the declaration keyword so resync always advances
                    pos_ = start;
                    advance();
                    skip_top_level_construct();
                }
            } else if (at_keyword("struct") || at_keyword("enum")) {
                // file-level type: remember the name so member access on
                // values of this type never looks like an external contract
                advance();
                if (at(TokenKind::Identifier)) unit.file_level_types.push_back(peek().lexeme);
                skip_top_level_construct();
            } else {
                skip_top_level_construct();
            }
        }

        unit.tokens = std::move(toks_);
        return unit;
    }

private:
    std::vector<Token> toks_;
    FileId file_;
    std::string path_;
    std::size_t pos_ = 0;

    // ---- primitives -------------------------------------------------------

    bool eof() const { return pos_ >= toks_.size(); }
    const Token& peek(std::size_t k = 0) const {
        static const Token eof_token{TokenKind::Punct, "", 0, 0, 0, 0};
        return pos_ + k < toks_.size() ? toks_[pos_ + k] : eof_token;
    }
    const Token& advance() { return toks_[pos_++]; }

    bool at(TokenKind kind) const { return !eof() && peek().kind == kind; }
    bool at_punct(std::string_view p) const { return !eof() && peek().is_punct(p); }
    bool at_keyword(std::string_view k) const { return !eof() && peek().is_keyword(k); }
    bool at_ident(std::string_view name) const {
        return !eof() && peek().is_identifier(name);
    }

    bool match_punct(std::string_view p) {
        if (!at_punct(p)) return false;
        advance();
        return true;
    }
    bool match_keyword(std::string_view k) {
        if (!at_keyword(k)) return false;
        advance();
        return true;
    }

    void expect_punct(std::string_view p) {
        if (!match_punct(p)) throw LocalFail{};
    }
    std::string expect_identifier() {
        if (!at(TokenKind::Identifier)) throw LocalFail{};
        return advance().lexeme;
    }

    // Curly braces are the only structural requirement: anything else
    // degrades to recovery spans, so files with balanced braces always parse.
    void check_brace_balance() {
        long depth = 0;
        for (const Token& t : toks_) {
            if (t.is_punct("{")) ++depth;
            if (t.is_punct("}")) {
                if (--depth < 0) {
                    throw ParseError(file_, t.line, t.column, "unbalanced '}'");
                }
            }
        }
        if (depth != 0) {
            const Token& last = toks_.back();
            throw ParseError(file_, last.line, last.column, "unbalanced '{'");
        }
    }

    // One-class bracket skip from the current opener. Never throws: a group
    // that runs off the end of the stream is consumed whole (brace balance
    // was checked up front, so this only happens to stray (/[ garbage).
    void skip_group() {
        int depth = 0;
        while (!eof()) {
            const Token& t = peek();
            if (t.is_punct("{") || t.is_punct("(") || t.is_punct("[")) {
                ++depth;
            } else if (t.is_punct("}") || t.is_punct(")") || t.is_punct("]")) {
                --depth;
                if (depth == 0) {
                    advance();
                    return;
                }
            }
            advance();
        }
    }

    bool at_top_decl_head() const {
        if (at_keyword("contract") || at_keyword("interface") || at_keyword("library"))
            return true;
        return at_ident("abstract") && peek(1).is_keyword("contract");
    }

    // Consume one top-level construct we do not model: runs to the next ';'
    // or past the next balanced brace group.
    void skip_top_level_construct() {
        while (!eof()) {
            if (at_punct(";")) {
                advance();
                return;
            }
            if (at_punct("{")) {
                skip_group();
                return;
            }
            if (at_punct("(") || at_punct("[")) {
                skip_group();
                continue;
            }
            if (at_top_decl_head() || at_keyword("pragma") || at_keyword("import")) return;
            advance();
        }
    }

    // ---- directives -------------------------------------------------------

    void parse_pragma(SourceUnit& unit) {
        advance();  // pragma
        std::string text;
        while (!eof() && !at_punct(";")) {
            if (!text.empty()) text += ' ';
            text += advance().lexeme;
        }
        match_punct(";");
        unit.pragmas.push_back(std::move(text));
    }

    void parse_import(SourceUnit& unit) {
        std::size_t start = pos_;
        advance();  // import
        ImportDirective dir;
        try {
            if (at(TokenKind::String)) {
                dir.path = unquote(advance().lexeme);
                if (at_ident("as")) {
                    advance();
                    dir.symbols.push_back(expect_identifier());
                }
            } else if (at_punct("*")) {
                advance();
                if (!at_ident("as")) throw LocalFail{};
                advance();
                dir.symbols.push_back(expect_identifier());
                if (!at_ident("from")) throw LocalFail{};
                advance();
                if (!at(TokenKind::String)) throw LocalFail{};
                dir.path = unquote(advance().lexeme);
            } else if (at_punct("{")) {
                advance();
                while (!at_punct("}")) {
                    std::string name = expect_identifier();
                    if (at_ident("as")) {
                        advance();
                        name = expect_identifier();
                    }
                    dir.symbols.push_back(std::move(name));
                    if (!match_punct(",")) break;
                }
                expect_punct("}");
                if (!at_ident("from")) throw LocalFail{};
                advance();
                if (!at(TokenKind::String)) throw LocalFail{};
                dir.path = unquote(advance().lexeme);
            } else {
                throw LocalFail{};
            }
            expect_punct(";");
            unit.imports.push_back(std::move(dir));
        } catch (const LocalFail&) {
            pos_ = start + 1;
            skip_top_level_construct();
        }
    }

    static std::string unquote(const std::string& lexeme) {
        if (lexeme.size() >= 2 && (lexeme.front() == '"' || lexeme.front() == '\'')) {
            return lexeme.substr(1, lexeme.size() - 2);
        }
        return lexeme;
    }

    // ---- declarations -----------------------------------------------------

    TopDecl parse_top_decl() {
        TopDecl decl;
        decl.span.begin = pos_;
        if (at_ident("abstract")) advance();
        const Token& head = advance();
        decl.line = head.line;
        decl.column = head.column;
        decl.kind = head.lexeme == "interface" ? TopDecl::Kind::Interface
                    : head.lexeme == "library" ? TopDecl::Kind::Library
                                               : TopDecl::Kind::Contract;
        decl.name = expect_identifier();

        try {
            if (match_keyword("is")) {
                do {
                    BaseSpecifier base;
                    base.line = peek().line;
                    base.column = peek().column;
                    base.name = parse_dotted_name();
                    if (at_punct("(")) {
                        base.has_args = true;
                        base.args = parse_call_args();
                    }
                    decl.bases.push_back(std::move(base));
                } while (match_punct(","));
            }
        } catch (const LocalFail&) {
            // keep the declaration; resync at its body
            while (!eof() && !at_punct("{") && !at_punct(";")) advance();
        }

        if (!at_punct("{")) throw LocalFail{};
        advance();
        while (!eof() && !at_punct("}")) {
            decl.members.push_back(parse_member());
        }
        match_punct("}");
        decl.span.end = pos_;
        return decl;
    }

    std::string parse_dotted_name() {
        std::string name = expect_identifier();
        while (at_punct(".") && peek(1).kind == TokenKind::Identifier) {
            advance();
            name += '.';
            name += advance().lexeme;
        }
        return name;
    }

    MemberDef parse_member() {
        std::size_t start = pos_;
        try {
            MemberDef m = parse_member_inner();
            m.span.begin = start;
            m.span.end = pos_;
            return m;
        } catch (const LocalFail&) {
            pos_ = start;
            MemberDef m;
            m.kind = MemberDef::Kind::Unknown;
            m.line = peek().line;
            m.column = peek().column;
            m.span.begin = start;
            recover_to_member_end();
            m.span.end = pos_;
            return m;
        }
    }

    void recover_to_member_end() {
        while (!eof()) {
            if (at_punct(";")) {
                advance();
                return;
            }
            if (at_punct("}")) return;  // enclosing body close
            if (at_punct("{")) {
                skip_group();
                return;
            }
            if (at_punct("(") || at_punct("[")) {
                skip_group();
                continue;
            }
            advance();
        }
    }

    MemberDef parse_member_inner() {
        if (at_keyword("function")) return parse_function_like(MemberDef::Kind::Function);
        if (at_keyword("constructor"))
            return parse_function_like(MemberDef::Kind::Constructor);
        if (at_keyword("modifier")) return parse_modifier();
        if (at_keyword("event")) return parse_event();
        if (at_keyword("using")) return parse_using();
        if (at_keyword("struct") || at_keyword("enum")) return parse_type_def();
        if ((at_ident("receive") || at_ident("fallback")) && peek(1).is_punct("(")) {
            MemberDef m;
            m.kind = MemberDef::Kind::Function;
            m.line = peek().line;
            m.column = peek().column;
            m.name = advance().lexeme;
            parse_function_tail(m);
            return m;
        }
        return parse_state_var();
    }

    MemberDef parse_function_like(MemberDef::Kind kind) {
        MemberDef m;
        m.kind = kind;
        m.line = peek().line;
        m.column = peek().column;
        advance();  // function | constructor
        if (kind == MemberDef::Kind::Constructor) {
            m.name = "constructor";
        } else if (at(TokenKind::Identifier)) {
            m.name = advance().lexeme;
        } else {
            m.name = "fallback";  // legacy unnamed function
        }
        parse_function_tail(m);
        return m;
    }

    void parse_function_tail(MemberDef& m) {
        m.params = parse_param_list();
        parse_function_header(m);
        if (match_punct(";")) return;
        if (!at_punct("{")) throw LocalFail{};
        m.body = parse_block();
    }

    void parse_function_header(MemberDef& m) {
        while (!eof()) {
            if (at_punct("{") || at_punct(";")) return;
            if (at_keyword("public") || at_keyword("private") || at_keyword("internal") ||
                at_keyword("external") || at_keyword("view") || at_keyword("pure") ||
                at_keyword("payable") || at_keyword("virtual")) {
                advance();
                continue;
            }
            if (at_keyword("override")) {
                advance();
                if (at_punct("(")) skip_group();
                continue;
            }
            if (at_keyword("returns")) {
                advance();
                m.returns = parse_param_list();
                continue;
            }
            if (at_ident("constant") || at_ident("immutable") || at_ident("anonymous")) {
                advance();
                continue;
            }
            if (at(TokenKind::Identifier)) {
                ModifierInvocation inv;
                inv.line = peek().line;
                inv.column = peek().column;
                inv.name = parse_dotted_name();
                if (at_punct("(")) {
                    inv.has_args = true;
                    inv.args = parse_call_args();
                }
                m.modifiers.push_back(std::move(inv));
                continue;
            }
            throw LocalFail{};
        }
        throw LocalFail{};
    }

    MemberDef parse_modifier() {
        MemberDef m;
        m.kind = MemberDef::Kind::Modifier;
        m.line = peek().line;
        m.column = peek().column;
        advance();  // modifier
        m.name = expect_identifier();
        if (at_punct("(")) m.params = parse_param_list();
        while (at_keyword("virtual") || at_keyword("override")) {
            advance();
            if (at_punct("(")) skip_group();
        }
        if (match_punct(";")) return m;  // virtual without body
        if (!at_punct("{")) throw LocalFail{};
        m.body = parse_block();
        return m;
    }

    MemberDef parse_event() {
        MemberDef m;
        m.kind = MemberDef::Kind::Event;
        m.line = peek().line;
        m.column = peek().column;
        advance();  // event
        m.name = expect_identifier();
        m.params = parse_param_list();
        if (at_ident("anonymous")) advance();
        expect_punct(";");
        return m;
    }

    MemberDef parse_using() {
        MemberDef m;
        m.kind = MemberDef::Kind::UsingFor;
        m.line = peek().line;
        m.column = peek().column;
        advance();  // using
        m.name = parse_dotted_name();
        if (!match_keyword("for")) throw LocalFail{};
        if (at_punct("*")) {
            advance();
            m.type_name = "*";
        } else {
            m.type_name = parse_type();
        }
        while (!eof() && !at_punct(";")) advance();  // `global` and friends
        expect_punct(";");
        return m;
    }

    MemberDef parse_type_def() {
        MemberDef m;
        m.kind = MemberDef::Kind::TypeDef;
        m.line = peek().line;
        m.column = peek().column;
        advance();  // struct | enum
        m.name = expect_identifier();
        if (!at_punct("{")) throw LocalFail{};
        skip_group();
        return m;
    }

    MemberDef parse_state_var() {
        MemberDef m;
        m.kind = MemberDef::Kind::StateVar;
        m.line = peek().line;
        m.column = peek().column;
        m.type_name = parse_type();
        while (at_keyword("public") || at_keyword("private") || at_keyword("internal") ||
               at_keyword("payable") || at_ident("constant") || at_ident("immutable") ||
               at_keyword("override")) {
            bool was_override = at_keyword("override");
            advance();
            if (was_override && at_punct("(")) skip_group();
        }
        m.name = expect_identifier();
        if (match_punct("=")) m.initializer = parse_expression();
        expect_punct(";");
        return m;
    }

    // ---- types ------------------------------------------------------------

    // Returns the base type name: elementary lexeme, dotted user path,
    // "mapping" or "function". Array suffixes are consumed and dropped (the
    // element type is what matters for call targets).
    std::string parse_type() {
        std::string base;
        if (at_keyword("mapping")) {
            advance();
            if (!at_punct("(")) throw LocalFail{};
            skip_group();
            base = "mapping";
        } else if (at_keyword("function")) {
            advance();
            if (!at_punct("(")) throw LocalFail{};
            skip_group();
            while (at_keyword("internal") || at_keyword("external") || at_keyword("view") ||
                   at_keyword("pure") || at_keyword("payable")) {
                advance();
            }
            if (at_keyword("returns")) {
                advance();
                if (!at_punct("(")) throw LocalFail{};
                skip_group();
            }
            base = "function";
        } else if (at_keyword("address")) {
            advance();
            match_keyword("payable");
            base = "address";
        } else if (at_keyword("payable")) {
            advance();
            base = "address";
        } else if (at(TokenKind::Identifier)) {
            base = parse_dotted_name();
        } else {
            throw LocalFail{};
        }
        while (at_punct("[")) skip_group();
        return base;
    }

    std::vector<ParamDecl> parse_param_list() {
        expect_punct("(");
        std::vector<ParamDecl> params;
        if (!at_punct(")")) {
            do {
                ParamDecl p;
                p.type_name = parse_type();
                while (at_keyword("memory") || at_keyword("storage") ||
                       at_keyword("calldata") || at_ident("indexed")) {
                    advance();
                }
                if (at(TokenKind::Identifier)) p.name = advance().lexeme;
                params.push_back(std::move(p));
            } while (match_punct(","));
        }
        expect_punct(")");
        return params;
    }

    // ---- statements -------------------------------------------------------

    Stmt parse_block() {
        Stmt block;
        block.kind = Stmt::Kind::Block;
        block.line = peek().line;
        block.column = peek().column;
        expect_punct("{");
        while (!eof() && !at_punct("}")) {
            block.stmts.push_back(
                std::make_unique<Stmt>(parse_statement_with_recovery()));
        }
        match_punct("}");
        return block;
    }

    Stmt parse_statement_with_recovery() {
        std::size_t start = pos_;
        try {
            return parse_statement();
        } catch (const LocalFail&) {
            pos_ = start;
            Stmt u;
            u.kind = Stmt::Kind::Unknown;
            u.line = peek().line;
            u.column = peek().column;
            u.span.begin = start;
            while (!eof()) {
                if (at_punct(";")) {
                    advance();
                    break;
                }
                if (at_punct("}")) break;
                if (at_punct("{")) {
                    skip_group();
                    break;
                }
                if (at_punct("(") || at_punct("[")) {
                    skip_group();
                    continue;
                }
                advance();
            }
            if (pos_ == start) advance();  // guaranteed progress
            u.span.end = pos_;
            return u;
        }
    }

    Stmt parse_statement() {
        if (at_punct("{")) return parse_block();
        if (at_keyword("if")) return parse_if();
        if (at_keyword("for")) return parse_for();
        if (at_keyword("while")) return parse_while();
        if (at_keyword("do")) return parse_do_while();
        if (at_keyword("try")) return parse_try();
        if (at_keyword("emit")) return parse_emit();
        if (at_keyword("return")) return parse_return();
        if (at_keyword("assembly")) return parse_assembly();
        return parse_var_decl_or_expr_statement();
    }

    Stmt make_stmt(Stmt::Kind kind) {
        Stmt s;
        s.kind = kind;
        s.line = peek().line;
        s.column = peek().column;
        return s;
    }

    Stmt parse_if() {
        Stmt s = make_stmt(Stmt::Kind::If);
        advance();
        expect_punct("(");
        s.exprs.push_back(parse_expression());
        expect_punct(")");
        s.stmts.push_back(std::make_unique<Stmt>(parse_statement_with_recovery()));
        if (match_keyword("else")) {
            s.stmts.push_back(std::make_unique<Stmt>(parse_statement_with_recovery()));
        }
        return s;
    }

    Stmt parse_for() {
        Stmt s = make_stmt(Stmt::Kind::For);
        advance();
        expect_punct("(");
        // init (owns its ';'), then cond ';' post ')'
        if (match_punct(";")) {
            s.stmts.push_back(nullptr);
        } else {
            s.stmts.push_back(
                std::make_unique<Stmt>(parse_var_decl_or_expr_statement()));
        }
        if (at_punct(";")) {
            s.exprs.push_back(nullptr);
            advance();
        } else {
            s.exprs.push_back(parse_expression());
            expect_punct(";");
        }
        if (at_punct(")")) {
            s.exprs.push_back(nullptr);
        } else {
            s.exprs.push_back(parse_expression());
        }
        expect_punct(")");
        s.stmts.push_back(std::make_unique<Stmt>(parse_statement_with_recovery()));
        return s;
    }

    Stmt parse_while() {
        Stmt s = make_stmt(Stmt::Kind::While);
        advance();
        expect_punct("(");
        s.exprs.push_back(parse_expression());
        expect_punct(")");
        s.stmts.push_back(std::make_unique<Stmt>(parse_statement_with_recovery()));
        return s;
    }

    Stmt parse_do_while() {
        Stmt s = make_stmt(Stmt::Kind::DoWhile);
        advance();
        s.stmts.push_back(std::make_unique<Stmt>(parse_statement_with_recovery()));
        if (!match_keyword("while")) throw LocalFail{};
        expect_punct("(");
        s.exprs.push_back(parse_expression());
        expect_punct(")");
        expect_punct(";");
        return s;
    }

    Stmt parse_try() {
        Stmt s = make_stmt(Stmt::Kind::Try);
        advance();
        s.exprs.push_back(parse_expression());
        if (at_keyword("returns")) {
            advance();
            parse_param_list();
        }
        if (!at_punct("{")) throw LocalFail{};
        s.stmts.push_back(std::make_unique<Stmt>(parse_block()));
        while (at_keyword("catch")) {
            advance();
            if (at(TokenKind::Identifier)) advance();  // Error / Panic
            if (at_punct("(")) parse_param_list();
            if (!at_punct("{")) throw LocalFail{};
            s.stmts.push_back(std::make_unique<Stmt>(parse_block()));
        }
        return s;
    }

    Stmt parse_emit() {
        Stmt s = make_stmt(Stmt::Kind::Emit);
        advance();
        s.exprs.push_back(parse_expression());
        expect_punct(";");
        return s;
    }

    Stmt parse_return() {
        Stmt s = make_stmt(Stmt::Kind::Return);
        advance();
        if (!at_punct(";")) s.exprs.push_back(parse_expression());
        expect_punct(";");
        return s;
    }

    Stmt parse_assembly() {
        Stmt s = make_stmt(Stmt::Kind::InlineAssembly);
        s.span.begin = pos_;
        advance();  // assembly
        if (at(TokenKind::String)) advance();
        if (at_punct("(")) skip_group();  // assembly ("memory-safe")
        if (!at_punct("{")) throw LocalFail{};
        skip_group();
        s.span.end = pos_;
        return s;
    }

    Stmt parse_var_decl_or_expr_statement() {
        std::size_t start = pos_;

        // `delete x;` must not be mistaken for a declaration of type `delete`
        if (at_ident("delete")) {
            Stmt s = make_stmt(Stmt::Kind::ExprStmt);
            s.exprs.push_back(parse_expression());
            expect_punct(";");
            return s;
        }

        if (at_punct("(")) {
            try {
                return parse_tuple_decl();
            } catch (const LocalFail&) {
                pos_ = start;
            }
        }

        try {
            Stmt s = make_stmt(Stmt::Kind::VarDecl);
            std::string type = parse_type();
            while (at_keyword("memory") || at_keyword("storage") || at_keyword("calldata")) {
                advance();
            }
            std::string name = expect_identifier();
            s.decl_types.push_back(std::move(type));
            s.decl_names.push_back(std::move(name));
            if (match_punct("=")) s.exprs.push_back(parse_expression());
            expect_punct(";");
            return s;
        } catch (const LocalFail&) {
            pos_ = start;
        }

        Stmt s = make_stmt(Stmt::Kind::ExprStmt);
        s.exprs.push_back(parse_expression());
        expect_punct(";");
        return s;
    }

    // (uint a, uint b, ) = expr;  -- empty slots recorded as "" entries
    Stmt parse_tuple_decl() {
        Stmt s = make_stmt(Stmt::Kind::VarDecl);
        expect_punct("(");
        auto component = [&]() {
            if (at_punct(",") || at_punct(")")) {
                s.decl_types.emplace_back();
                s.decl_names.emplace_back();
                return;
            }
            std::string type = parse_type();
            while (at_keyword("memory") || at_keyword("storage") || at_keyword("calldata")) {
                advance();
            }
            std::string name = expect_identifier();
            s.decl_types.push_back(std::move(type));
            s.decl_names.push_back(std::move(name));
        };
        component();
        while (match_punct(",")) component();
        expect_punct(")");
        expect_punct("=");
        s.exprs.push_back(parse_expression());
        expect_punct(";");
        bool any_named = false;
        for (const std::string& name : s.decl_names) {
            if (!name.empty()) any_named = true;
        }
        if (!any_named) throw LocalFail{};
        return s;
    }

    // ---- expressions ------------------------------------------------------

    ExprPtr make_node(Expr::Kind kind, std::string text = {}) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->text = std::move(text);
        e->line = peek().line;
        e->column = peek().column;
        return e;
    }

    ExprPtr parse_expression() { return parse_assignment(); }

    ExprPtr parse_assignment() {
        ExprPtr lhs = parse_conditional();
        if (at(TokenKind::Punct)) {
            for (auto op : kAssignOps) {
                if (peek().lexeme == op) {
                    auto node = make_node(Expr::Kind::Assign, std::string(op));
                    advance();
                    node->children.push_back(std::move(lhs));
                    node->children.push_back(parse_assignment());
                    return node;
                }
            }
        }
        return lhs;
    }

    ExprPtr parse_conditional() {
        ExprPtr cond = parse_binary(0);
        if (at_punct("?")) {
            auto node = make_node(Expr::Kind::Conditional);
            advance();
            node->children.push_back(std::move(cond));
            node->children.push_back(parse_expression());
            expect_punct(":");
            node->children.push_back(parse_conditional());
            return node;
        }
        return cond;
    }

    static int binary_level(const Token& t) {
        if (t.kind != TokenKind::Punct) return -1;
        const std::string& op = t.lexeme;
        if (op == "||") return 0;
        if (op == "&&") return 1;
        if (op == "|") return 2;
        if (op == "^") return 3;
        if (op == "&") return 4;
        if (op == "==" || op == "!=") return 5;
        if (op == "<" || op == ">" || op == "<=" || op == ">=") return 6;
        if (op == "<<" || op == ">>") return 7;
        if (op == "+" || op == "-") return 8;
        if (op == "*" || op == "/" || op == "%") return 9;
        if (op == "**") return 10;
        return -1;
    }

    ExprPtr parse_binary(int min_level) {
        ExprPtr lhs = parse_unary();
        while (!eof()) {
            int level = binary_level(peek());
            if (level < min_level) break;
            std::string op = advance().lexeme;
            // ** is right-associative
            ExprPtr rhs = parse_binary(op == "**" ? level : level + 1);
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Binary;
            node->text = std::move(op);
            node->line = lhs->line;
            node->column = lhs->column;
            node->children.push_back(std::move(lhs));
            node->children.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (at_punct("!") || at_punct("~") || at_punct("+") || at_punct("-") ||
            at_punct("++") || at_punct("--") || at_ident("delete")) {
            auto node = make_node(Expr::Kind::Unary, peek().lexeme);
            advance();
            node->children.push_back(parse_unary());
            return node;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (!eof()) {
            if (at_punct(".")) {
                if (peek(1).kind != TokenKind::Identifier &&
                    peek(1).kind != TokenKind::Keyword) {
                    break;
                }
                advance();
                auto node = make_node(Expr::Kind::Member, advance().lexeme);
                node->children.push_back(std::move(e));
                e = std::move(node);
                continue;
            }
            if (at_punct("(")) {
                auto node = make_node(Expr::Kind::Call);
                node->children.push_back(std::move(e));
                for (auto& arg : parse_call_args()) node->children.push_back(std::move(arg));
                e = std::move(node);
                continue;
            }
            if (at_punct("[")) {
                auto node = make_node(Expr::Kind::Index);
                advance();
                node->children.push_back(std::move(e));
                if (!at_punct("]") && !at_punct(":")) {
                    node->children.push_back(parse_expression());
                }
                if (match_punct(":")) {
                    if (!at_punct("]")) node->children.push_back(parse_expression());
                }
                expect_punct("]");
                e = std::move(node);
                continue;
            }
            // call options: f{value: v}(...); the `{name:` lookahead keeps
            // block statements (try/if bodies) out of expression parsing
            if (at_punct("{") && peek(1).kind == TokenKind::Identifier &&
                peek(2).is_punct(":")) {
                std::vector<ExprPtr> opts = parse_named_args();
                auto node = make_node(Expr::Kind::Call);
                node->children.push_back(std::move(e));
                for (auto& o : opts) node->children.push_back(std::move(o));
                if (at_punct("(")) {
                    for (auto& arg : parse_call_args())
                        node->children.push_back(std::move(arg));
                }
                e = std::move(node);
                continue;
            }
            if (at_punct("++") || at_punct("--")) {
                auto node = make_node(Expr::Kind::Unary, "post" + peek().lexeme);
                advance();
                node->children.push_back(std::move(e));
                e = std::move(node);
                continue;
            }
            break;
        }
        return e;
    }

    std::vector<ExprPtr> parse_call_args() {
        expect_punct("(");
        std::vector<ExprPtr> args;
        if (!at_punct(")")) {
            do {
                if (at_punct("{")) {
                    // named-argument call: f({a: 1, b: 2})
                    for (auto& v : parse_named_args()) args.push_back(std::move(v));
                } else {
                    args.push_back(parse_expression());
                }
            } while (match_punct(","));
        }
        expect_punct(")");
        return args;
    }

    // { name : expr, ... } -> the value expressions
    std::vector<ExprPtr> parse_named_args() {
        expect_punct("{");
        std::vector<ExprPtr> values;
        while (!at_punct("}")) {
            expect_identifier();
            expect_punct(":");
            values.push_back(parse_expression());
            if (!match_punct(",")) break;
        }
        expect_punct("}");
        return values;
    }

    ExprPtr parse_primary() {
        if (eof()) throw LocalFail{};
        const Token& t = peek();

        switch (t.kind) {
            case TokenKind::Number: {
                auto node = make_node(Expr::Kind::Literal, t.lexeme);
                advance();
                if (!eof() && is_number_unit(peek())) advance();  // 5 ether
                return node;
            }
            case TokenKind::String: {
                auto node = make_node(Expr::Kind::Literal, t.lexeme);
                advance();
                while (at(TokenKind::String)) advance();  // implicit concat
                return node;
            }
            case TokenKind::Keyword: {
                if (t.lexeme == "this") {
                    auto node = make_node(Expr::Kind::This);
                    advance();
                    return node;
                }
                if (t.lexeme == "new") {
                    advance();
                    std::string type;
                    if (at(TokenKind::Identifier)) {
                        type = parse_dotted_name();
                    } else if (at_keyword("address")) {
                        advance();
                        type = "address";
                    } else {
                        throw LocalFail{};
                    }
                    auto node = make_node(Expr::Kind::New, std::move(type));
                    while (at_punct("[")) skip_group();
                    return node;
                }
                if (t.lexeme == "address" || t.lexeme == "payable") {
                    auto node = make_node(Expr::Kind::TypeExpr,
                                          t.lexeme == "payable" ? "payable" : "address");
                    advance();
                    return node;
                }
                if (t.lexeme == "require") {
                    auto node = make_node(Expr::Kind::Identifier, "require");
                    advance();
                    return node;
                }
                throw LocalFail{};
            }
            case TokenKind::Identifier: {
                if (is_elementary_type_name(t.lexeme)) {
                    auto node = make_node(Expr::Kind::TypeExpr, t.lexeme);
                    advance();
                    return node;
                }
                auto node = make_node(Expr::Kind::Identifier, t.lexeme);
                advance();
                return node;
            }
            case TokenKind::Punct: {
                if (t.lexeme == "(") {
                    auto tuple = make_node(Expr::Kind::Tuple);
                    advance();
                    bool saw_comma = false;
                    while (!at_punct(")")) {
                        if (at_punct(",")) {
                            tuple->children.push_back(nullptr);
                            advance();
                            saw_comma = true;
                            continue;
                        }
                        tuple->children.push_back(parse_expression());
                        if (at_punct(",")) {
                            advance();
                            saw_comma = true;
                            if (at_punct(")")) tuple->children.push_back(nullptr);
                        } else {
                            break;
                        }
                    }
                    expect_punct(")");
                    if (!saw_comma && tuple->children.size() == 1 && tuple->children[0]) {
                        return std::move(tuple->children[0]);
                    }
                    return tuple;
                }
                if (t.lexeme == "[") {
                    auto node = make_node(Expr::Kind::Tuple);
                    advance();
                    while (!at_punct("]")) {
                        node->children.push_back(parse_expression());
                        if (!match_punct(",")) break;
                    }
                    expect_punct("]");
                    return node;
                }
                throw LocalFail{};
            }
        }
        throw LocalFail{};
    }
};

}  // namespace

SourceUnit parse_unit(std::vector<Token> tokens, FileId file, std::string path) {
    return Parser(std::move(tokens), file, std::move(path)).run();
}

}  // namespace dappnet
