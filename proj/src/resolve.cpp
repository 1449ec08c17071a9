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

#include "dappnet/resolve.hpp"

#include <functional>

#include "dappnet/lexer.hpp"

namespace dappnet {

namespace {

MemberTable collect_members(const TopDecl& decl) {
    MemberTable table;
    for (const MemberDef& m : decl.members) {
        switch (m.kind) {
            case MemberDef::Kind::Function:
                table.functions.insert(m.name);
                break;
            case MemberDef::Kind::Event:
                table.events.insert(m.name);
                break;
            case MemberDef::Kind::Modifier:
                table.modifiers.insert(m.name);
                break;
            case MemberDef::Kind::StateVar:
                table.state_vars.emplace(m.name, m.type_name);
                break;
            case MemberDef::Kind::TypeDef:
                table.type_names.insert(m.name);
                break;
            default:
                break;
        }
    }
    return table;
}

const std::set<std::string>& class_set(const MemberTable& table, MemberClass cls) {
    switch (cls) {
        case MemberClass::Function: return table.functions;
        case MemberClass::Event: return table.events;
        case MemberClass::Modifier: return table.modifiers;
    }
    return table.functions;  // unreachable
}

}  // namespace

DeclRegistry build_registry(const std::vector<SourceUnit>& units) {
    DeclRegistry registry;
    for (const SourceUnit& unit : units) {
        for (const std::string& name : unit.file_level_types) {
            registry.value_types.insert(name);
        }
        for (const TopDecl& decl : unit.declarations) {
            auto it = registry.by_name.find(decl.name);
            if (it != registry.by_name.end()) {
                registry.warnings.push_back("duplicate declaration '" + decl.name +
                                            "' in " + unit.path + " (keeping " +
                                            it->second.file + ")");
                continue;
            }
            DeclInfo info;
            info.kind = decl.kind;
            info.file = unit.path;
            for (const BaseSpecifier& base : decl.bases) info.bases.push_back(base.name);
            info.members = collect_members(decl);
            for (const std::string& t : info.members.type_names) {
                registry.value_types.insert(t);
            }
            registry.by_name.emplace(decl.name, std::move(info));
        }
    }
    return registry;
}

std::optional<std::string> resolve_member(const DeclRegistry& registry,
                                          const std::string& contract,
                                          const std::string& member, MemberClass cls,
                                          std::vector<std::string>* warnings) {
    std::vector<std::string> owners;  // preorder discovery; first is nearest
    std::set<std::string> visited;
    std::set<std::string> on_path;
    bool cycle = false;

    std::function<void(const std::string&)> dfs = [&](const std::string& name) {
        if (on_path.count(name)) {
            cycle = true;
            return;
        }
        if (!visited.insert(name).second) return;  // diamond: seen already
        const DeclInfo* info = registry.find(name);
        if (!info) return;
        if (class_set(info->members, cls).count(member)) owners.push_back(name);
        on_path.insert(name);
        for (const std::string& base : info->bases) dfs(base);
        on_path.erase(name);
    };
    dfs(contract);

    if (cycle && warnings) {
        warnings->push_back("inheritance cycle while resolving '" + member +
                            "' from '" + contract + "'");
    }
    if (owners.empty()) return std::nullopt;
    if (owners.size() > 1 && owners.front() != contract && warnings) {
        warnings->push_back("member '" + member + "' reached from '" + contract +
                            "' is declared by multiple bases; nearest-wins order applied");
    }
    return owners.front();
}

namespace {

// Classifies one declared (name, type) pair into the binding. Later calls for
// the same name overwrite earlier ones, which yields shadowing when applied
// in declaration order.
void bind_one(const DeclRegistry& registry, TypeBinding& binding,
              const std::string& name, const std::string& type) {
    if (name.empty() || type.empty()) return;
    binding.types.erase(name);
    binding.unknown_types.erase(name);
    if (type.find('.') != std::string::npos) return;  // library structs etc.
    if (registry.contains(type)) {
        binding.types.emplace(name, type);
        return;
    }
    if (is_elementary_type_name(type) || type == "mapping" || type == "function") return;
    if (registry.value_types.count(type)) return;  // known struct/enum
    binding.unknown_types.insert(name);
}

void bind_state_vars(const DeclRegistry& registry, const std::string& name,
                     std::set<std::string>& seen, TypeBinding& binding) {
    if (!seen.insert(name).second) return;
    const DeclInfo* info = registry.find(name);
    if (!info) return;
    // bases first so own declarations shadow inherited ones
    for (const std::string& base : info->bases) bind_state_vars(registry, base, seen, binding);
    for (const auto& [var, type] : info->members.state_vars) {
        bind_one(registry, binding, var, type);
    }
}

void collect_locals(const DeclRegistry& registry, const Stmt& stmt, TypeBinding& binding) {
    if (stmt.kind == Stmt::Kind::Unknown || stmt.kind == Stmt::Kind::InlineAssembly) return;
    if (stmt.kind == Stmt::Kind::VarDecl) {
        for (std::size_t i = 0; i < stmt.decl_names.size(); ++i) {
            bind_one(registry, binding, stmt.decl_names[i], stmt.decl_types[i]);
        }
    }
    for (const StmtPtr& child : stmt.stmts) {
        if (child) collect_locals(registry, *child, binding);
    }
}

}  // namespace

TypeBinding bind_types(const DeclRegistry& registry, const TopDecl& decl) {
    TypeBinding binding;
    std::set<std::string> seen;
    seen.insert(decl.name);
    for (const BaseSpecifier& base : decl.bases) {
        bind_state_vars(registry, base.name, seen, binding);
    }
    // own declarations shadow inherited ones
    for (const MemberDef& m : decl.members) {
        if (m.kind == MemberDef::Kind::StateVar) {
            bind_one(registry, binding, m.name, m.type_name);
        }
    }
    return binding;
}

TypeBinding bind_types(const DeclRegistry& registry, const TopDecl& decl,
                       const MemberDef& member) {
    TypeBinding binding = bind_types(registry, decl);
    for (const ParamDecl& p : member.params) {
        bind_one(registry, binding, p.name, p.type_name);
    }
    for (const ParamDecl& p : member.returns) {
        bind_one(registry, binding, p.name, p.type_name);
    }
    if (member.body) collect_locals(registry, *member.body, binding);
    return binding;
}

}  // namespace dappnet
