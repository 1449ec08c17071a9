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
#include <string_view>
#include <vector>

#include "dappnet/ast.hpp"
#include "dappnet/resolve.hpp"

namespace dappnet {

inline constexpr std::string_view kExternalTarget = "External";
inline constexpr std::string_view kGlobalScope = "Global";
inline constexpr std::string_view kConstructorName = "constructor";

/// One extracted interaction; the row of the output CSV. `rule` and
/// `source_kind` are provenance tags kept out of the CSV.
struct CallRecord {
    enum class Rule { Constructor, Global, This, Cast, Construct, External };
    enum class SourceKind { Function, Constructor, Modifier, Global };

    std::string file;
    std::string source_contract;
    std::string source_function;        // name | "constructor" | "Global"
    std::string target_contract;        // name | "External"
    std::vector<std::string> chain;     // member names, possibly empty
    Rule rule = Rule::Construct;
    SourceKind source_kind = SourceKind::Function;

    bool operator==(const CallRecord& other) const {
        return file == other.file && source_contract == other.source_contract &&
               source_function == other.source_function &&
               target_contract == other.target_contract && chain == other.chain &&
               rule == other.rule && source_kind == other.source_kind;
    }
};

std::string_view rule_name(CallRecord::Rule rule);

/// Walks every function, constructor and modifier body of the unit (plus
/// state-variable initializers and base-specifier arguments) emitting records
/// in source order:
///
///   - each constructor is a self call; base specifiers with arguments call
///     the base from Global scope
///   - every `this` is a self call from its enclosing construct
///   - Cast(T, ...) and new T with T in the registry call T
///   - x.m(...) with x bound to a registry type, L.m(...) with L a registry
///     name, modifier invocations and emitted events call the owning
///     declaration
///   - failed modifier/event resolution, casts matching an import alias and
///     members on unknown-typed variables collapse onto the single External
///     target; bare identifier calls emit nothing
///
/// InlineAssembly and Unknown spans are never descended. Extraction is total:
/// it never fails on parsed input.
std::vector<CallRecord> extract_calls(const SourceUnit& unit,
                                      const DeclRegistry& registry,
                                      std::vector<std::string>* warnings = nullptr);

}  // namespace dappnet
