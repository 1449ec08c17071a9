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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dappnet/ast.hpp"

namespace dappnet {

enum class MemberClass { Function, Event, Modifier };

/// Per-declaration member names. Inheritance is handled by resolve_member,
/// never by flattening these sets.
struct MemberTable {
    std::set<std::string> functions;
    std::set<std::string> events;
    std::set<std::string> modifiers;
    std::map<std::string, std::string> state_vars;  // name -> declared type
    std::set<std::string> type_names;               // nested structs/enums
};

struct DeclInfo {
    TopDecl::Kind kind = TopDecl::Kind::Contract;
    std::string file;
    std::vector<std::string> bases;  // source order
    MemberTable members;
};

/// DApp-wide map of contract/interface/library names. A name missing here
/// means "not defined within the scanned set".
struct DeclRegistry {
    std::map<std::string, DeclInfo> by_name;
    std::set<std::string> value_types;   // struct/enum names across all files
    std::vector<std::string> warnings;   // duplicate declarations

    bool contains(const std::string& name) const { return by_name.count(name) != 0; }
    const DeclInfo* find(const std::string& name) const {
        auto it = by_name.find(name);
        return it == by_name.end() ? nullptr : &it->second;
    }
};

/// Single-threaded merge over parsed units. Duplicate names: first scanned
/// wins and a warning is recorded; never fails.
DeclRegistry build_registry(const std::vector<SourceUnit>& units);

/// Nearest declaration owning `member` in the given class: self first, then
/// bases depth-first in source order of the `is` list. Inheritance cycles
/// abort the affected chain with a warning and the search returns absent if
/// nothing else matches.
std::optional<std::string> resolve_member(const DeclRegistry& registry,
                                          const std::string& contract,
                                          const std::string& member,
                                          MemberClass cls,
                                          std::vector<std::string>* warnings = nullptr);

/// Variable name -> user-declared type, in shadowing order (inherited state
/// vars, own state vars, parameters, named returns, locals). `types` only
/// ever holds registry names; names declared with a plausible but unscanned
/// contract type land in `unknown_types` instead (the External rule feeds on
/// them). Elementary, mapping, function and known struct/enum types bind
/// nothing.
struct TypeBinding {
    std::map<std::string, std::string> types;
    std::set<std::string> unknown_types;
};

TypeBinding bind_types(const DeclRegistry& registry, const TopDecl& decl,
                       const MemberDef& member);

/// Contract-scope binding (state variables only); used for state-variable
/// initializers and base-specifier arguments.
TypeBinding bind_types(const DeclRegistry& registry, const TopDecl& decl);

}  // namespace dappnet
