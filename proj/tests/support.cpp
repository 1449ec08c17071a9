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

#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "dappnet/csv.hpp"
#include "dappnet/lexer.hpp"

namespace testsupport {

using namespace dappnet;

const char* kFig2Contract1 = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;
import "./Contract2.sol";
import "./Contract3.sol";
contract Contract1 {
    Contract2 contract2;
    Contract3 contract3;

    constructor (Contract2 _contract2, Contract3 _contract3) {
        contract2 = _contract2;
        contract3 = _contract3;
    }

    function func1() public {
        contract2.func2();
        contract3.func3();
    }
}
)sol";

const char* kFig2Contract2 = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;
import "./Contract1.sol";
import "./Contract3.sol";
contract Contract2 {
    Contract1 contract1;
    Contract3 contract3;

    constructor (Contract1 _contract1, Contract3 _contract3) {
        contract1 = _contract1;
        contract3 = _contract3;
    }

    function func2() public {
        contract1.func1();
        contract3.func3();
    }
}
)sol";

const char* kFig2Contract3 = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;
import "./Contract1.sol";
import "./Contract2.sol";
contract Contract3 {
    Contract1 contract1;
    Contract2 contract2;

    constructor (Contract1 _contract1,
        Contract2 _contract2) {
        contract1 = _contract1;
        contract2 = _contract2;
    }

    function func3() public {
        contract1.func1();
        contract2.func2();
    }
}
)sol";

const char* kOwnable = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;

contract Ownable {
    address internal _owner;

    event OwnershipPushed(address indexed previousOwner, address indexed newOwner);

    modifier onlyPolicy() {
        require(_owner == msg.sender, "Ownable: caller is not the owner");
        _;
    }

    function renounceManagement() public virtual override onlyPolicy() {
        emit OwnershipPushed(_owner, address(0));
        _owner = address(0);
    }
}
)sol";

const char* kIUniswapV2Pair = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;

interface IUniswapV2Pair {
    function getReserves() external view returns (uint112, uint112, uint32);
    function token0() external view returns (address);
}
)sol";

const char* kIERC20 = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;

interface IERC20 {
    event Transfer(address indexed from, address indexed to, uint256 value);

    function decimals() external view returns (uint8);
    function totalSupply() external view returns (uint256);
    function balanceOf(address account) external view returns (uint256);
}
)sol";

const char* kBondCalculator = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;
import "./IUniswapV2Pair.sol";
import "./IERC20.sol";

contract BondCalculator {
    address public SGT;

    function markdown( address _pair )
    external view returns ( uint ) {
        (uint reserve0, uint reserve1, ) = IUniswapV2Pair
        ( _pair ).getReserves();
        uint reserve;
        if ( IUniswapV2Pair( _pair ).token0() == SGT ) {
            reserve = reserve1;
        } else {
            reserve = reserve0;
        }
        return reserve.mul( 2 * ( 10 ** IERC20( SGT ).
        decimals() ) ).div( getTotalValue( _pair ) )
        ;
    }

    function getTotalValue(address _pair) public view returns (uint) {
        return 0;
    }
}
)sol";

const char* kERC20 = R"sol(// SPDX-License-Identifier: MIT
pragma solidity ^0.7.6;
import "./IERC20.sol";

contract ERC20 is IERC20 {
    mapping(address => uint256) internal _balances;
    uint256 internal _totalSupply;

    function _mint(address account_, uint256 amount_)
        internal virtual {
        require(account_ != address(0), "ERC20: mint to the zero address");
        _beforeTokenTransfer(address(this), account_,
            amount_);
        _totalSupply = _totalSupply.add(amount_);
        _balances[account_] = _balances[account_].add(
            amount_);
        emit Transfer(address(this), account_, amount_);
    }

    function _beforeTokenTransfer(address from_, address to_, uint256 amount_)
        internal virtual { }
}
)sol";

SourceUnit parse_source(const std::string& text, const std::string& path, FileId id) {
    return parse_unit(tokenize(text, id), id, path);
}

Corpus run_pipeline(std::vector<std::pair<std::string, std::string>> files) {
    std::sort(files.begin(), files.end());
    Corpus corpus;
    for (std::size_t i = 0; i < files.size(); ++i) {
        corpus.units.push_back(
            parse_source(files[i].second, files[i].first, static_cast<FileId>(i)));
    }
    corpus.registry = build_registry(corpus.units);
    corpus.warnings = corpus.registry.warnings;
    for (const SourceUnit& unit : corpus.units) {
        std::vector<CallRecord> records =
            extract_calls(unit, corpus.registry, &corpus.warnings);
        for (CallRecord& r : records) corpus.records.push_back(std::move(r));
    }
    return corpus;
}

std::vector<CallRecord> extract_from(const std::string& text) {
    return run_pipeline({{"test.sol", text}}).records;
}

std::string brief(const CallRecord& r) {
    std::string out = r.source_contract + "." + r.source_function + " -> " +
                      r.target_contract + " [" + chain_to_string(r.chain) + "] (" +
                      std::string(rule_name(r.rule)) + ")";
    return out;
}

std::vector<std::string> briefs(const std::vector<CallRecord>& records) {
    std::vector<std::string> out;
    out.reserve(records.size());
    for (const CallRecord& r : records) out.push_back(brief(r));
    return out;
}

// ---- AST dump ----------------------------------------------------------------

namespace {

const char* expr_kind_name(Expr::Kind kind) {
    switch (kind) {
        case Expr::Kind::Identifier: return "id";
        case Expr::Kind::This: return "this";
        case Expr::Kind::Member: return "member";
        case Expr::Kind::Call: return "call";
        case Expr::Kind::New: return "new";
        case Expr::Kind::Tuple: return "tuple";
        case Expr::Kind::Index: return "index";
        case Expr::Kind::Unary: return "unary";
        case Expr::Kind::Binary: return "binary";
        case Expr::Kind::Assign: return "assign";
        case Expr::Kind::Conditional: return "cond";
        case Expr::Kind::Literal: return "lit";
        case Expr::Kind::TypeExpr: return "type";
    }
    return "?";
}

const char* stmt_kind_name(Stmt::Kind kind) {
    switch (kind) {
        case Stmt::Kind::Block: return "block";
        case Stmt::Kind::If: return "if";
        case Stmt::Kind::For: return "for";
        case Stmt::Kind::While: return "while";
        case Stmt::Kind::DoWhile: return "dowhile";
        case Stmt::Kind::Try: return "try";
        case Stmt::Kind::Emit: return "emit";
        case Stmt::Kind::Return: return "return";
        case Stmt::Kind::VarDecl: return "decl";
        case Stmt::Kind::ExprStmt: return "expr";
        case Stmt::Kind::InlineAssembly: return "asm";
        case Stmt::Kind::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace

std::string dump(const Expr& expr) {
    std::string out = "(";
    out += expr_kind_name(expr.kind);
    if (!expr.text.empty()) {
        out += ' ';
        out += expr.text;
    }
    for (const ExprPtr& child : expr.children) {
        out += ' ';
        out += child ? dump(*child) : "_";
    }
    out += ')';
    return out;
}

std::string dump(const Stmt& stmt) {
    std::string out = "(";
    out += stmt_kind_name(stmt.kind);
    for (std::size_t i = 0; i < stmt.decl_names.size(); ++i) {
        out += " [" + stmt.decl_types[i] + " " + stmt.decl_names[i] + "]";
    }
    for (const ExprPtr& e : stmt.exprs) {
        out += ' ';
        out += e ? dump(*e) : "_";
    }
    for (const StmtPtr& s : stmt.stmts) {
        out += ' ';
        out += s ? dump(*s) : "_";
    }
    out += ')';
    return out;
}

std::string dump(const SourceUnit& unit) {
    std::ostringstream out;
    for (const ImportDirective& imp : unit.imports) {
        out << "(import " << imp.path;
        for (const std::string& s : imp.symbols) out << ' ' << s;
        out << ")\n";
    }
    for (const TopDecl& decl : unit.declarations) {
        out << "(decl "
            << (decl.kind == TopDecl::Kind::Contract     ? "contract"
                : decl.kind == TopDecl::Kind::Interface ? "interface"
                                                         : "library")
            << ' ' << decl.name;
        for (const BaseSpecifier& base : decl.bases) {
            out << " :is " << base.name << (base.has_args ? "(args)" : "");
        }
        out << "\n";
        for (const MemberDef& m : decl.members) {
            switch (m.kind) {
                case MemberDef::Kind::Function: out << "  (function " << m.name; break;
                case MemberDef::Kind::Constructor: out << "  (constructor"; break;
                case MemberDef::Kind::Modifier: out << "  (modifier " << m.name; break;
                case MemberDef::Kind::Event: out << "  (event " << m.name; break;
                case MemberDef::Kind::StateVar:
                    out << "  (statevar " << m.type_name << ' ' << m.name;
                    if (m.initializer) out << " = " << dump(*m.initializer);
                    break;
                case MemberDef::Kind::UsingFor:
                    out << "  (using " << m.name << " for " << m.type_name;
                    break;
                case MemberDef::Kind::TypeDef: out << "  (typedef " << m.name; break;
                case MemberDef::Kind::Unknown: out << "  (unknown-member"; break;
            }
            for (const ModifierInvocation& inv : m.modifiers) out << " :mod " << inv.name;
            if (m.body) out << " " << dump(*m.body);
            out << ")\n";
        }
        out << ")\n";
    }
    return out.str();
}

// ---- filesystem helpers ----------------------------------------------------

TempDir::TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto candidate = std::filesystem::temp_directory_path() /
                         ("dappnet-test-" + std::to_string(rng()));
        std::error_code ec;
        if (std::filesystem::create_directory(candidate, ec)) {
            path_ = candidate;
            return;
        }
    }
    throw std::runtime_error("cannot create temporary directory");
}

TempDir::~TempDir() {
    if (path_.empty()) return;
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace testsupport
