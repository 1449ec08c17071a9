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

#include "dappnet/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "dappnet/lexer.hpp"
#include "dappnet/parser.hpp"

namespace dappnet {

unsigned effective_workers(unsigned configured) {
    if (const char* env = std::getenv("DAPPNET_WORKERS")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && value > 0) return static_cast<unsigned>(value);
    }
    if (configured > 0) return configured;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 4;
}

namespace {

// Runs fn(0..n-1) across `workers` threads. fn must handle its own errors;
// slot-indexed output keeps results deterministic regardless of scheduling.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
        static_cast<unsigned char>(text[1]) == 0xBB &&
        static_cast<unsigned char>(text[2]) == 0xBF) {
        text.erase(0, 3);  // UTF-8 BOM
    }
    return text;
}

struct DiscoveredFile {
    std::filesystem::path full;
    std::string relative;  // scan-root relative, '/' separators
};

std::vector<DiscoveredFile> discover(const std::vector<std::filesystem::path>& roots) {
    std::vector<DiscoveredFile> files;
    const bool prefix_root = roots.size() > 1;
    for (const auto& root : roots) {
        if (!std::filesystem::exists(root)) {
            throw ScanError("input path does not exist: " + root.string());
        }
        if (std::filesystem::is_regular_file(root)) {
            if (root.extension() == ".sol") {
                files.push_back({root, root.filename().generic_string()});
            }
            continue;
        }
        for (auto it = std::filesystem::recursive_directory_iterator(root);
             it != std::filesystem::recursive_directory_iterator(); ++it) {
            if (!it->is_regular_file() || it->path().extension() != ".sol") continue;
            std::string rel = std::filesystem::relative(it->path(), root).generic_string();
            if (prefix_root) rel = root.filename().generic_string() + "/" + rel;
            files.push_back({it->path(), std::move(rel)});
        }
    }
    std::sort(files.begin(), files.end(),
              [](const DiscoveredFile& a, const DiscoveredFile& b) {
                  return a.relative < b.relative;
              });
    return files;
}

}  // namespace

ScanResult scan_tree(const ScanConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    ScanResult result;
    result.report.dapp_name =
        !config.name.empty()
            ? config.name
            : (config.roots.empty()
                   ? std::string("dapp")
                   : std::filesystem::absolute(config.roots.front()).filename().string());

    std::vector<DiscoveredFile> files = discover(config.roots);
    if (files.empty()) {
        throw ScanError("no .sol files found under the given input");
    }
    result.report.files_discovered = files.size();

    const unsigned workers = effective_workers(config.workers);

    // phase 1: lex + parse, one slot per file
    std::vector<std::optional<SourceUnit>> units(files.size());
    std::vector<std::optional<FileIssue>> issues(files.size());
    parallel_for(files.size(), workers, [&](std::size_t i) {
        try {
            std::string text = read_file(files[i].full);
            std::vector<Token> tokens = tokenize(text, static_cast<FileId>(i));
            units[i] = parse_unit(std::move(tokens), static_cast<FileId>(i),
                                  files[i].relative);
        } catch (const LexError& e) {
            issues[i] = FileIssue{files[i].relative,
                                  "lexical error at " + std::to_string(e.line) + ":" +
                                      std::to_string(e.column) + ": " + e.what()};
        } catch (const ParseError& e) {
            issues[i] = FileIssue{files[i].relative,
                                  "parse error at " + std::to_string(e.line) + ":" +
                                      std::to_string(e.column) + ": " + e.what()};
        } catch (const std::exception& e) {
            issues[i] = FileIssue{files[i].relative, e.what()};
        }
    });

    for (std::size_t i = 0; i < files.size(); ++i) {
        if (units[i]) {
            result.units.push_back(std::move(*units[i]));
        } else if (issues[i]) {
            result.report.issues.push_back(std::move(*issues[i]));
        }
    }
    result.report.files_scanned = result.units.size();
    result.report.files_skipped = result.report.issues.size();

    // phase 2: registry over every parsed unit, then per-file extraction
    result.registry = build_registry(result.units);
    result.report.contract_count = result.registry.by_name.size();
    for (const std::string& w : result.registry.warnings) {
        result.report.warnings.push_back(w);
    }

    std::vector<std::vector<CallRecord>> records(result.units.size());
    std::vector<std::vector<std::string>> warnings(result.units.size());
    parallel_for(result.units.size(), workers, [&](std::size_t i) {
        records[i] = extract_calls(result.units[i], result.registry, &warnings[i]);
    });

    for (std::size_t i = 0; i < result.units.size(); ++i) {
        for (CallRecord& r : records[i]) result.records.push_back(std::move(r));
        for (std::string& w : warnings[i]) result.report.warnings.push_back(std::move(w));
    }
    result.report.record_count = result.records.size();

    const auto end = std::chrono::steady_clock::now();
    result.report.seconds = std::chrono::duration<double>(end - start).count();
    return result;
}

std::string format_report(const ScanReport& report) {
    std::ostringstream out;
    out << "DApp:         " << report.dapp_name << "\n";
    out << "Files:        " << report.files_discovered << " discovered, "
        << report.files_scanned << " scanned, " << report.files_skipped << " skipped\n";
    out << "Contracts:    " << report.contract_count << "\n";
    out << "Call records: " << report.record_count << "\n";
    out << "Elapsed:      " << report.seconds << " s\n";
    for (const FileIssue& issue : report.issues) {
        out << "  skipped " << issue.file << ": " << issue.message << "\n";
    }
    for (const std::string& warning : report.warnings) {
        out << "  warning: " << warning << "\n";
    }
    return out.str();
}

}  // namespace dappnet
