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

#include <algorithm>

#include "dappnet/resolve.hpp"
#include "support.hpp"

using namespace dappnet;
using testsupport::parse_source;
using testsupport::run_pipeline;

namespace {

using Corpus_t = testsupport::Corpus;

Corpus_t fig2_corpus() {
    return run_pipeline({{"Contract1.sol", testsupport::kFig2Contract1},
                         {"Contract2.sol", testsupport::kFig2Contract2},
                         {"Contract3.sol", testsupport::kFig2Contract3}});
}

}  // namespace

TEST_CASE("registry over the three-file corpus") {
    auto corpus = fig2_corpus();
    const DeclRegistry& reg = corpus.registry;
    REQUIRE(reg.by_name.size() == 3);
    for (const char* name : {"Contract1", "Contract2", "Contract3"}) {
        REQUIRE(reg.contains(name));
        CHECK(reg.find(name)->kind == TopDecl::Kind::Contract);
    }
    CHECK(reg.find("Contract1")->members.functions ==
          std::set<std::string>{"func1"});
    CHECK(reg.find("Contract3")->members.state_vars.at("contract1") == "Contract1");
    CHECK(reg.warnings.empty());
}

TEST_CASE("empty unit list yields an empty registry") {
    DeclRegistry reg = build_registry({});
    CHECK(reg.by_name.empty());
    CHECK(reg.warnings.empty());
}

TEST_CASE("duplicate declarations: first scanned wins with one warning") {
    auto corpus = run_pipeline({
        {"a.sol", "contract Ownable { function fromA() public {} }"},
        {"b.sol", "contract Ownable { function fromB() public {} }"},
    });
    REQUIRE(corpus.registry.by_name.size() == 1);  // distinct names
    CHECK(corpus.registry.find("Ownable")->file == "a.sol");
    CHECK(corpus.registry.find("Ownable")->members.functions.count("fromA") == 1);
    REQUIRE(corpus.registry.warnings.size() == 1);
}

TEST_CASE("registry is order-insensitive for unique names") {
    auto a = run_pipeline({{"Contract1.sol", testsupport::kFig2Contract1},
                           {"Contract2.sol", testsupport::kFig2Contract2}});
    auto b = run_pipeline({{"Contract2.sol", testsupport::kFig2Contract2},
                           {"Contract1.sol", testsupport::kFig2Contract1}});
    REQUIRE(a.registry.by_name.size() == b.registry.by_name.size());
    for (const auto& [name, info] : a.registry.by_name) {
        const DeclInfo* other = b.registry.find(name);
        REQUIRE(other != nullptr);
        CHECK(other->kind == info.kind);
        CHECK(other->bases == info.bases);
        CHECK(other->members.functions == info.members.functions);
    }
}

TEST_CASE("resolve_member: self declaration") {
    auto corpus = run_pipeline({{"Ownable.sol", testsupport::kOwnable}});
    auto owner = resolve_member(corpus.registry, "Ownable", "onlyPolicy",
                                MemberClass::Modifier);
    REQUIRE(owner.has_value());
    CHECK(*owner == "Ownable");
}

TEST_CASE("resolve_member: event found through the base interface") {
    auto corpus = run_pipeline({{"ERC20.sol", testsupport::kERC20},
                                {"IERC20.sol", testsupport::kIERC20}});
    auto owner =
        resolve_member(corpus.registry, "ERC20", "Transfer", MemberClass::Event);
    REQUIRE(owner.has_value());
    CHECK(*owner == "IERC20");
}

TEST_CASE("resolve_member: missing member is absent") {
    auto corpus = run_pipeline({{"Ownable.sol", testsupport::kOwnable}});
    CHECK_FALSE(resolve_member(corpus.registry, "Ownable", "nosuch",
                               MemberClass::Function)
                    .has_value());
}

TEST_CASE("self-precedence over bases") {
    auto corpus = run_pipeline({{"t.sol", R"sol(
contract Base { function f() public {} }
contract Derived is Base { function f() public {} }
)sol"}});
    auto owner = resolve_member(corpus.registry, "Derived", "f", MemberClass::Function);
    REQUIRE(owner.has_value());
    CHECK(*owner == "Derived");
}

TEST_CASE("depth-first left-to-right base order") {
    auto corpus = run_pipeline({{"t.sol", R"sol(
contract GrandLeft { function f() public {} }
contract Left is GrandLeft { }
contract Right { function f() public {} }
contract D is Left, Right { }
)sol"}});
    std::vector<std::string> warnings;
    auto owner =
        resolve_member(corpus.registry, "D", "f", MemberClass::Function, &warnings);
    REQUIRE(owner.has_value());
    CHECK(*owner == "GrandLeft");  // left branch fully explored first
    // two distinct base owners -> diamond-order warning
    REQUIRE(warnings.size() == 1);
}

TEST_CASE("inheritance cycle aborts with a warning") {
    auto corpus = run_pipeline({{"t.sol", R"sol(
contract A is B { }
contract B is A { }
)sol"}});
    std::vector<std::string> warnings;
    auto owner =
        resolve_member(corpus.registry, "A", "nothing", MemberClass::Function, &warnings);
    CHECK_FALSE(owner.has_value());
    CHECK(warnings.size() == 1);
}

TEST_CASE("bind_types: worked-example scope") {
    auto corpus = fig2_corpus();
    const SourceUnit* unit3 = nullptr;
    for (const auto& u : corpus.units) {
        if (u.path == "Contract3.sol") unit3 = &u;
    }
    REQUIRE(unit3 != nullptr);
    const TopDecl& decl = unit3->declarations[0];
    const MemberDef& func3 = decl.members[3];
    TypeBinding binding = bind_types(corpus.registry, decl, func3);
    CHECK(binding.types ==
          std::map<std::string, std::string>{{"contract1", "Contract1"},
                                             {"contract2", "Contract2"}});
    CHECK(binding.unknown_types.empty());
}

TEST_CASE("bind_types: elementary parameters bind nothing") {
    auto corpus = run_pipeline({{"BondCalculator.sol", testsupport::kBondCalculator},
                                {"IUniswapV2Pair.sol", testsupport::kIUniswapV2Pair},
                                {"IERC20.sol", testsupport::kIERC20}});
    const SourceUnit* unit = nullptr;
    for (const auto& u : corpus.units) {
        if (u.path == "BondCalculator.sol") unit = &u;
    }
    REQUIRE(unit != nullptr);
    const TopDecl& decl = unit->declarations[0];
    const MemberDef& markdown = decl.members[1];
    REQUIRE(markdown.name == "markdown");
    TypeBinding binding = bind_types(corpus.registry, decl, markdown);
    CHECK(binding.types.empty());
}

TEST_CASE("bind_types: local declaration binds its registry type") {
    auto corpus = run_pipeline({{"t.sol", R"sol(
contract Vault { function act() public {} }
contract C {
    function f(address a) public {
        Vault v = Vault(a);
        v.act();
    }
}
)sol"}});
    const TopDecl* c = nullptr;
    for (const auto& u : corpus.units) {
        for (const auto& d : u.declarations) {
            if (d.name == "C") c = &d;
        }
    }
    REQUIRE(c != nullptr);
    TypeBinding binding = bind_types(corpus.registry, *c, c->members[0]);
    CHECK(binding.types == std::map<std::string, std::string>{{"v", "Vault"}});
}

TEST_CASE("bind_types never returns a name absent from the registry") {
    auto corpus = run_pipeline({{"ERC20.sol", testsupport::kERC20},
                                {"IERC20.sol", testsupport::kIERC20},
                                {"Ownable.sol", testsupport::kOwnable}});
    for (const SourceUnit& unit : corpus.units) {
        for (const TopDecl& decl : unit.declarations) {
            for (const MemberDef& m : decl.members) {
                if (m.kind != MemberDef::Kind::Function &&
                    m.kind != MemberDef::Kind::Constructor &&
                    m.kind != MemberDef::Kind::Modifier) {
                    continue;
                }
                TypeBinding binding = bind_types(corpus.registry, decl, m);
                for (const auto& [var, type] : binding.types) {
                    (void)var;
                    CHECK(corpus.registry.contains(type));
                }
            }
        }
    }
}

TEST_CASE("unknown user types mark variables External-typed") {
    auto corpus = run_pipeline({{"t.sol", R"sol(
contract C {
    IUnscanned thing;
    function f(IAlsoUnscanned p) public {
        thing.poke();
    }
}
)sol"}});
    const TopDecl& decl = corpus.units[0].declarations[0];
    TypeBinding binding = bind_types(corpus.registry, decl, decl.members[1]);
    CHECK(binding.unknown_types == std::set<std::string>{"thing", "p"});
}

TEST_CASE("struct and enum types are known values, not External") {
    auto corpus = run_pipeline({{"t.sol", R"sol(
contract C {
    struct Point { uint x; }
    Point origin;
    Counters.Counter ids;
    function f() public {
        Point memory p = origin;
    }
}
)sol"}});
    const TopDecl& decl = corpus.units[0].declarations[0];
    TypeBinding binding = bind_types(corpus.registry, decl, decl.members.back());
    CHECK(binding.types.empty());
    CHECK(binding.unknown_types.empty());  // dotted + struct types stay silent
}

TEST_CASE("inherited state variables participate in binding") {
    auto corpus = run_pipeline({{"t.sol", R"sol(
contract Target { function hit() public {} }
contract Base { Target stored; }
contract Derived is Base {
    function f() public { stored.hit(); }
}
)sol"}});
    const TopDecl* derived = nullptr;
    for (const auto& d : corpus.units[0].declarations) {
        if (d.name == "Derived") derived = &d;
    }
    REQUIRE(derived != nullptr);
    TypeBinding binding = bind_types(corpus.registry, *derived, derived->members[0]);
    CHECK(binding.types == std::map<std::string, std::string>{{"stored", "Target"}});
}
