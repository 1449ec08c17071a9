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

#include "dappnet/extract.hpp"

#include <set>

namespace dappnet {

std::string_view rule_name(CallRecord::Rule rule) {
    switch (rule) {
        case CallRecord::Rule::Constructor: return "constructor";
        case CallRecord::Rule::Global: return "global";
        case CallRecord::Rule::This: return "this";
        case CallRecord::Rule::Cast: return "cast";
        case CallRecord::Rule::Construct: return "construct";
        case CallRecord::Rule::External: return "external";
    }
    return "construct";
}

namespace {

struct Walker {
    const SourceUnit& unit;
    const DeclRegistry& registry;
    std::vector<std::string>* warnings;
    std::vector<CallRecord>& out;
    std::set<std::string> import_symbols;

    // scope of the construct currently being walked
    const TopDecl* decl = nullptr;
    std::string enclosing;
    CallRecord::SourceKind source_kind = CallRecord::SourceKind::Function;
    const TypeBinding* binding = nullptr;

    void emit(CallRecord::Rule rule, std::string target, std::vector<std::string> chain) {
        CallRecord r;
        r.file = unit.path;
        r.source_contract = decl->name;
        r.source_function = enclosing;
        r.target_contract = std::move(target);
        r.chain = std::move(chain);
        r.rule = rule;
        r.source_kind = source_kind;
        out.push_back(std::move(r));
    }

    // ---- expression walk ----------------------------------------------

    // Fresh position: no member chain applies from the outside.
    void walk(const Expr* e) {
        if (!e) return;
        std::vector<std::string> chain;
        spine(e, chain);
    }

    void walk_all(const std::vector<ExprPtr>& exprs, std::size_t from = 0) {
        for (std::size_t i = from; i < exprs.size(); ++i) walk(exprs[i].get());
    }

    // Descends the postfix spine of `e` collecting the member names applied
    // around the eventual core, then classifies the core. `chain` holds the
    // names applied outside `e`, nearest first.
    void spine(const Expr* e, std::vector<std::string>& chain) {
        switch (e->kind) {
            case Expr::Kind::Member: {
                chain.insert(chain.begin(), e->text);
                spine(e->children[0].get(), chain);
                return;
            }
            case Expr::Kind::Index: {
                // indexing passes through: pool[i].withdraw() reaches pool
                spine(e->children[0].get(), chain);
                walk_all(e->children, 1);
                return;
            }
            case Expr::Kind::Call: {
                const Expr* callee = e->children[0].get();
                if (callee->kind == Expr::Kind::Identifier) {
                    on_cast_like(callee->text, chain);
                    walk_all(e->children, 1);
                    return;
                }
                if (callee->kind == Expr::Kind::New) {
                    on_new(callee->text, chain);
                    walk_all(e->children, 1);
                    return;
                }
                if (callee->kind == Expr::Kind::Member || callee->kind == Expr::Kind::Index ||
                    callee->kind == Expr::Kind::Call) {
                    spine(callee, chain);
                    walk_all(e->children, 1);
                    return;
                }
                // elementary casts (address(this)), literals, tuples: the
                // chain applies to a non-target value, drop it
                walk_all(e->children, 0);
                return;
            }
            case Expr::Kind::This:
                emit(CallRecord::Rule::This, decl->name, chain);
                return;
            case Expr::Kind::Identifier:
                on_identifier(e->text, chain);
                return;
            case Expr::Kind::New:
                on_new(e->text, chain);
                return;
            default:
                // operators, tuples, literals: children are fresh positions
                walk_all(e->children, 0);
                return;
        }
    }

    // Call(Identifier T, ...): a cast when T names a scanned declaration, an
    // External cast when T matches an import alias, otherwise a plain
    // function call which emits nothing.
    void on_cast_like(const std::string& name, const std::vector<std::string>& chain) {
        if (registry.contains(name)) {
            emit(CallRecord::Rule::Cast, name, chain);
        } else if (import_symbols.count(name)) {
            emit(CallRecord::Rule::External, std::string(kExternalTarget), chain);
        }
    }

    void on_new(const std::string& type, const std::vector<std::string>& chain) {
        if (registry.contains(type)) {
            emit(CallRecord::Rule::Cast, type, chain);
        }
    }

    // Bare identifier with members applied: construct call through a typed
    // variable, a direct library/contract access, or External for variables
    // of unscanned type. Without members it is a plain reference.
    void on_identifier(const std::string& name, const std::vector<std::string>& chain) {
        if (chain.empty() || !binding) return;
        auto bound = binding->types.find(name);
        if (bound != binding->types.end()) {
            emit(CallRecord::Rule::Construct, bound->second, chain);
            return;
        }
        if (registry.contains(name)) {
            emit(CallRecord::Rule::Construct, name, chain);
            return;
        }
        if (binding->unknown_types.count(name)) {
            emit(CallRecord::Rule::External, std::string(kExternalTarget), chain);
        }
    }

    // ---- statement walk -------------------------------------------------

    void walk_stmt(const Stmt& s) {
        switch (s.kind) {
            case Stmt::Kind::InlineAssembly:
            case Stmt::Kind::Unknown:
                return;  // opaque spans are never descended
            case Stmt::Kind::Emit:
                if (!s.exprs.empty() && s.exprs[0]) on_emit(*s.exprs[0]);
                return;
            default:
                break;
        }
        for (const ExprPtr& e : s.exprs) walk(e.get());
        for (const StmtPtr& child : s.stmts) {
            if (child) walk_stmt(*child);
        }
    }

    // emit E(...): the event resolves through inheritance; qualified forms
    // (emit Lib.E(...)) fall back to the ordinary expression walk.
    void on_emit(const Expr& call) {
        if (call.kind == Expr::Kind::Call && !call.children.empty() &&
            call.children[0]->kind == Expr::Kind::Identifier) {
            const std::string& event = call.children[0]->text;
            auto owner = resolve_member(registry, decl->name, event, MemberClass::Event,
                                        warnings);
            if (owner) {
                emit(CallRecord::Rule::Construct, *owner, {event});
            } else {
                emit(CallRecord::Rule::External, std::string(kExternalTarget), {event});
            }
            walk_all(call.children, 1);
            return;
        }
        walk(&call);
    }

    void on_modifier_invocation(const ModifierInvocation& inv) {
        auto owner =
            resolve_member(registry, decl->name, inv.name, MemberClass::Modifier, warnings);
        if (owner) {
            emit(CallRecord::Rule::Construct, *owner, {inv.name});
        } else if (registry.contains(inv.name)) {
            // base-constructor invocation written on the signature
            emit(CallRecord::Rule::Construct, inv.name, {});
        } else {
            emit(CallRecord::Rule::External, std::string(kExternalTarget), {inv.name});
        }
        for (const ExprPtr& arg : inv.args) walk(arg.get());
    }

    // ---- construct drivers ------------------------------------------------

    void run() {
        for (const ImportDirective& dir : unit.imports) {
            for (const std::string& sym : dir.symbols) import_symbols.insert(sym);
        }
        for (const TopDecl& d : unit.declarations) {
            decl = &d;
            TypeBinding contract_scope = bind_types(registry, d);

            // base specifiers with arguments are contract-scope calls
            enclosing = kGlobalScope;
            source_kind = CallRecord::SourceKind::Global;
            binding = &contract_scope;
            for (const BaseSpecifier& base : d.bases) {
                if (base.has_args && registry.contains(base.name)) {
                    emit(CallRecord::Rule::Global, base.name, {});
                }
                for (const ExprPtr& arg : base.args) walk(arg.get());
            }

            for (const MemberDef& m : d.members) {
                switch (m.kind) {
                    case MemberDef::Kind::StateVar: {
                        enclosing = kGlobalScope;
                        source_kind = CallRecord::SourceKind::Global;
                        binding = &contract_scope;
                        walk(m.initializer.get());
                        break;
                    }
                    case MemberDef::Kind::Constructor: {
                        TypeBinding scope = bind_types(registry, d, m);
                        enclosing = kConstructorName;
                        source_kind = CallRecord::SourceKind::Constructor;
                        binding = &scope;
                        emit(CallRecord::Rule::Constructor, d.name, {});
                        for (const ModifierInvocation& inv : m.modifiers) {
                            on_modifier_invocation(inv);
                        }
                        if (m.body) walk_stmt(*m.body);
                        break;
                    }
                    case MemberDef::Kind::Function: {
                        TypeBinding scope = bind_types(registry, d, m);
                        enclosing = m.name;
                        source_kind = CallRecord::SourceKind::Function;
                        binding = &scope;
                        for (const ModifierInvocation& inv : m.modifiers) {
                            on_modifier_invocation(inv);
                        }
                        if (m.body) walk_stmt(*m.body);
                        break;
                    }
                    case MemberDef::Kind::Modifier: {
                        TypeBinding scope = bind_types(registry, d, m);
                        enclosing = m.name;
                        source_kind = CallRecord::SourceKind::Modifier;
                        binding = &scope;
                        if (m.body) walk_stmt(*m.body);
                        break;
                    }
                    default:
                        break;  // events, using-for, type defs: declaration sites
                }
            }
        }
    }
};

}  // namespace

std::vector<CallRecord> extract_calls(const SourceUnit& unit, const DeclRegistry& registry,
                                      std::vector<std::string>* warnings) {
    std::vector<CallRecord> records;
    Walker walker{unit, registry, warnings, records, {}, nullptr, {},
                  CallRecord::SourceKind::Function, nullptr};
    walker.run();
    return records;
}

}  // namespace dappnet
