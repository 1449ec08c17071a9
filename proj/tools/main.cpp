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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dappnet/csv.hpp"
#include "dappnet/export.hpp"
#include "dappnet/report.hpp"
#include "dappnet/scan.hpp"

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file(out_path, content);
    }
}

// `input` is either a directory of .sol files (scanned) or a CSV produced by
// a previous scan.
std::vector<dappnet::CallRecord> load_records(const std::string& input, unsigned workers) {
    fs::path path(input);
    if (fs::is_regular_file(path) && path.extension() == ".csv") {
        return dappnet::parse_csv(read_file(path));
    }
    dappnet::ScanConfig config;
    config.roots = {path};
    config.workers = workers;
    dappnet::ScanResult result = dappnet::scan_tree(config);
    return std::move(result.records);
}

struct GraphFlags {
    bool include_constructors = false;
    bool include_global = false;
    bool no_external = false;

    dappnet::GraphOptions options() const {
        dappnet::GraphOptions o;
        o.include_constructors = include_constructors;
        o.include_global = include_global;
        o.include_external = !no_external;
        return o;
    }
};

void add_graph_flags(CLI::App* cmd, GraphFlags& flags) {
    cmd->add_flag("--include-constructors", flags.include_constructors,
                  "Keep constructor records in the graph");
    cmd->add_flag("--include-global", flags.include_global,
                  "Keep Global-scope records in the graph");
    cmd->add_flag("--no-external", flags.no_external,
                  "Drop records targeting External");
}

int run_scan_one(const fs::path& root, const fs::path& out_dir, const std::string& name,
                 unsigned workers) {
    dappnet::ScanConfig config;
    config.roots = {root};
    config.name = name;
    config.workers = workers;
    dappnet::ScanResult result = dappnet::scan_tree(config);

    fs::create_directories(out_dir);
    fs::path csv_path = out_dir / (result.report.dapp_name + ".csv");
    write_file(csv_path, dappnet::to_csv(result.records));

    std::cout << dappnet::format_report(result.report);
    std::cout << "CSV:          " << csv_path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solidity dependency-network toolchain: scans DApp source trees, "
                 "extracts contract-call records and analyzes the resulting networks"};
    app.require_subcommand(1);
    unsigned workers = 0;

    // scan
    std::string scan_dir, scan_name;
    std::string scan_out = ".";
    auto* scan = app.add_subcommand("scan", "Scan a DApp directory and write its CSV");
    scan->add_option("dir", scan_dir, "Directory with .sol files")
        ->required()
        ->check(CLI::ExistingDirectory);
    scan->add_option("--out", scan_out, "Output directory (default: .)");
    scan->add_option("--name", scan_name, "DApp name (default: directory base name)");
    scan->add_option("--workers", workers, "Worker threads (0 = auto)");

    // graph
    std::string graph_input, graph_format, graph_out;
    GraphFlags graph_flags;
    auto* graph = app.add_subcommand("graph", "Export the bipartite dependency graph");
    graph->add_option("input", graph_input, "DApp directory or scan CSV")->required();
    graph->add_option("--format", graph_format, "graphml | dot | json-edges")
        ->required()
        ->check(CLI::IsMember({"graphml", "dot", "json-edges"}));
    add_graph_flags(graph, graph_flags);
    graph->add_option("--out", graph_out, "Output file (default: stdout)");
    graph->add_option("--workers", workers, "Worker threads (0 = auto)");

    // analyze
    std::string analyze_input, analyze_target, analyze_out;
    GraphFlags analyze_flags;
    auto* analyze = app.add_subcommand("analyze", "Network metrics report (JSON)");
    analyze->add_option("input", analyze_input, "DApp directory or scan CSV")->required();
    analyze->add_option("--target", analyze_target, "bipartite | functions | contracts")
        ->required()
        ->check(CLI::IsMember({"bipartite", "functions", "contracts"}));
    add_graph_flags(analyze, analyze_flags);
    analyze->add_option("--out", analyze_out, "Output file (default: stdout)");
    analyze->add_option("--workers", workers, "Worker threads (0 = auto)");

    // backbone
    std::string backbone_input, backbone_out;
    std::string backbone_target = "functions";
    double alpha = 0.05;
    GraphFlags backbone_flags;
    auto* backbone =
        app.add_subcommand("backbone", "Disparity-filter backbone report (JSON)");
    backbone->add_option("input", backbone_input, "DApp directory or scan CSV")->required();
    backbone->add_option("--alpha", alpha, "Significance level in (0, 1] (default 0.05)");
    backbone->add_option("--target", backbone_target, "functions | contracts | bipartite")
        ->check(CLI::IsMember({"functions", "contracts", "bipartite"}));
    add_graph_flags(backbone, backbone_flags);
    backbone->add_option("--out", backbone_out, "Output file (default: stdout)");
    backbone->add_option("--workers", workers, "Worker threads (0 = auto)");

    // resilience
    std::string resilience_input, resilience_out;
    std::string resilience_target = "functions";
    std::string strategy = "both";
    double step = 0.02;
    std::uint64_t seed = 0;
    GraphFlags resilience_flags;
    auto* resilience =
        app.add_subcommand("resilience", "Node-removal resilience curves (JSON)");
    resilience->add_option("input", resilience_input, "DApp directory or scan CSV")
        ->required();
    resilience->add_option("--strategy", strategy, "targeted | random | both (default)")
        ->check(CLI::IsMember({"targeted", "random", "both"}));
    resilience->add_option("--seed", seed, "Random-removal seed");
    resilience->add_option("--step", step, "Fraction of nodes removed per round");
    resilience->add_option("--target", resilience_target,
                           "functions | contracts | bipartite")
        ->check(CLI::IsMember({"functions", "contracts", "bipartite"}));
    add_graph_flags(resilience, resilience_flags);
    resilience->add_option("--out", resilience_out, "Output file (default: stdout)");
    resilience->add_option("--workers", workers, "Worker threads (0 = auto)");

    // batch
    std::string batch_root;
    std::string batch_out = ".";
    auto* batch = app.add_subcommand("batch", "Scan every DApp subdirectory of a root");
    batch->add_option("root", batch_root, "Root directory of DApp directories")
        ->required()
        ->check(CLI::ExistingDirectory);
    batch->add_option("--out", batch_out, "Output directory (default: .)");
    batch->add_option("--workers", workers, "Worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan->parsed()) {
            return run_scan_one(scan_dir, scan_out, scan_name, workers);
        }
        if (graph->parsed()) {
            auto records = load_records(graph_input, workers);
            auto format = dappnet::parse_export_format(graph_format);
            auto bipartite = dappnet::build_bipartite(records, graph_flags.options());
            write_output(graph_out, dappnet::export_bipartite(bipartite, *format));
            return 0;
        }
        if (analyze->parsed()) {
            auto records = load_records(analyze_input, workers);
            auto target = dappnet::parse_analysis_target(analyze_target);
            auto report =
                dappnet::analyze_report(records, *target, analyze_flags.options());
            write_output(analyze_out, report.dump(2) + "\n");
            return 0;
        }
        if (backbone->parsed()) {
            auto records = load_records(backbone_input, workers);
            auto target = dappnet::parse_analysis_target(backbone_target);
            auto report = dappnet::backbone_report(records, *target,
                                                   backbone_flags.options(), alpha);
            write_output(backbone_out, report.dump(2) + "\n");
            return 0;
        }
        if (resilience->parsed()) {
            auto records = load_records(resilience_input, workers);
            auto target = dappnet::parse_analysis_target(resilience_target);
            std::optional<dappnet::RemovalStrategy> chosen;
            if (strategy == "targeted") chosen = dappnet::RemovalStrategy::Targeted;
            if (strategy == "random") chosen = dappnet::RemovalStrategy::Random;
            auto report = dappnet::resilience_report(
                records, *target, resilience_flags.options(), chosen, step, seed);
            write_output(resilience_out, report.dump(2) + "\n");
            return 0;
        }
        if (batch->parsed()) {
            bool any = false;
            std::vector<fs::path> subdirs;
            for (const auto& entry : fs::directory_iterator(batch_root)) {
                if (entry.is_directory()) subdirs.push_back(entry.path());
            }
            std::sort(subdirs.begin(), subdirs.end());
            for (const auto& dir : subdirs) {
                try {
                    run_scan_one(dir, batch_out, dir.filename().string(), workers);
                    std::cout << "\n";
                    any = true;
                } catch (const dappnet::ScanError&) {
                    std::cout << "skipping " << dir.string() << ": no .sol files\n\n";
                }
            }
            if (!any) {
                std::cerr << "error: no scannable DApp directories under " << batch_root
                          << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
