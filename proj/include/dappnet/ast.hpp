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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dappnet/token.hpp"

namespace dappnet {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// Expression node. `kind` decides how `text` and `children` are read:
//
//   Identifier   text = name
//   This         -
//   Member       text = member name, children = {object}
//   Call         children = {callee, arg...}
//   New          text = created type name
//   Tuple        children = elements; null entries mark skipped slots
//   Index        children = {base, index...} (index slots optional)
//   Unary        text = operator, children = {operand}
//   Binary       text = operator, children = {lhs, rhs}
//   Assign       text = operator, children = {target, value}
//   Conditional  children = {cond, then, else}
//   Literal      text = lexeme
//   TypeExpr     text = elementary type name (cast head)
struct Expr {
    enum class Kind {
        Identifier,
        This,
        Member,
        Call,
        New,
        Tuple,
        Index,
        Unary,
        Binary,
        Assign,
        Conditional,
        Literal,
        TypeExpr,
    };

    Kind kind = Kind::Identifier;
    std::string text;
    std::vector<ExprPtr> children;
    int line = 0;
    int column = 0;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

/// Half-open token index range [begin, end) into the owning unit's tokens.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Statement node. Slot conventions:
//
//   Block          stmts = body
//   If             exprs = {cond}, stmts = {then} or {then, else}
//   For            exprs = {cond?, post?}, stmts = {init?, body} (nulls kept)
//   While, DoWhile exprs = {cond}, stmts = {body}
//   Try            exprs = {guarded call}, stmts = {success, catch...}
//   Emit           exprs = {event call}
//   Return         exprs = {value?}
//   VarDecl        decl_types/decl_names parallel ("" = skipped tuple slot),
//                  exprs = {initializer?}
//   ExprStmt       exprs = {expr}
//   InlineAssembly span = raw tokens, never descended
//   Unknown        span = raw tokens, never descended
struct Stmt {
    enum class Kind {
        Block,
        If,
        For,
        While,
        DoWhile,
        Try,
        Emit,
        Return,
        VarDecl,
        ExprStmt,
        InlineAssembly,
        Unknown,
    };

    Kind kind = Kind::Block;
    std::vector<ExprPtr> exprs;
    std::vector<StmtPtr> stmts;
    std::vector<std::string> decl_types;
    std::vector<std::string> decl_names;
    TokenSpan span;
    int line = 0;
    int column = 0;
};

struct ParamDecl {
    std::string type_name;  // base type name; arrays recorded by element type
    std::string name;       // may be empty (unnamed parameter)
};

struct ModifierInvocation {
    std::string name;
    std::vector<ExprPtr> args;
    bool has_args = false;  // parentheses present, possibly empty
    int line = 0;
    int column = 0;
};

struct MemberDef {
    enum class Kind {
        Function,
        Constructor,
        Modifier,
        Event,
        StateVar,
        UsingFor,
        TypeDef,   // struct/enum name, recorded for name resolution only
        Unknown,   // recovered span (custom errors and other unparsed forms)
    };

    Kind kind = Kind::Unknown;
    std::string name;       // Function/Modifier/Event/StateVar/TypeDef name;
                            // UsingFor: library name
    std::vector<ParamDecl> params;
    std::vector<ParamDecl> returns;
    std::vector<ModifierInvocation> modifiers;
    std::optional<Stmt> body;  // absent for bodiless (interface/abstract)
    std::string type_name;     // StateVar declared type; UsingFor target type
    ExprPtr initializer;       // StateVar
    TokenSpan span;
    int line = 0;
    int column = 0;
};

struct BaseSpecifier {
    std::string name;
    bool has_args = false;
    std::vector<ExprPtr> args;
    int line = 0;
    int column = 0;
};

struct TopDecl {
    enum class Kind { Contract, Interface, Library };

    Kind kind = Kind::Contract;
    std::string name;
    std::vector<BaseSpecifier> bases;  // source order of the `is` list
    std::vector<MemberDef> members;
    TokenSpan span;
    int line = 0;
    int column = 0;
};

struct ImportDirective {
    std::string path;                   // literal string from source, unresolved
    std::vector<std::string> symbols;   // local names/aliases, if listed
};

/// Parsed representation of one Solidity file. Owns its token sequence so
/// Unknown/InlineAssembly spans stay resolvable.
struct SourceUnit {
    FileId file = 0;
    std::string path;
    std::vector<std::string> pragmas;
    std::vector<ImportDirective> imports;
    std::vector<TopDecl> declarations;
    std::vector<std::string> file_level_types;  // structs/enums outside contracts
    std::vector<Token> tokens;
};

}  // namespace dappnet
