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

#include "dappnet/netanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dappnet {

namespace {

// Engine-stable Fisher-Yates: std::shuffle's output is implementation
// defined, this is not.
void deterministic_shuffle(std::vector<int>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace

AnalysisGraph::AnalysisGraph(
    const std::set<std::string>& nodes,
    const std::map<std::pair<std::string, std::string>, double>& edges) {
    names_.assign(nodes.begin(), nodes.end());
    for (const auto& [edge, w] : edges) {
        (void)w;
        if (!nodes.count(edge.first)) names_.push_back(edge.first);
        if (!nodes.count(edge.second)) names_.push_back(edge.second);
    }
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        index_.emplace(names_[i], static_cast<int>(i));
    }

    std::map<std::pair<int, int>, double> merged;
    for (const auto& [edge, w] : edges) {
        int u = index_.at(edge.first);
        int v = index_.at(edge.second);
        if (u == v) continue;  // simple graph: self-loops dropped
        if (u > v) std::swap(u, v);
        merged[{u, v}] += w;
    }

    adj_.resize(names_.size());
    edges_.reserve(merged.size());
    for (const auto& [edge, w] : merged) {
        edges_.emplace_back(edge.first, edge.second, w);
        adj_[static_cast<std::size_t>(edge.first)].emplace_back(edge.second, w);
        adj_[static_cast<std::size_t>(edge.second)].emplace_back(edge.first, w);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

AnalysisGraph AnalysisGraph::from_bipartite(const BipartiteGraph& graph) {
    std::set<std::string> nodes;
    for (const auto& [name, kind] : graph.nodes_a) {
        (void)kind;
        nodes.insert(name);
    }
    nodes.insert(graph.nodes_b.begin(), graph.nodes_b.end());
    std::map<std::pair<std::string, std::string>, double> edges;
    for (const auto& [edge, mult] : graph.edges) {
        edges[edge] = static_cast<double>(mult);
    }
    return AnalysisGraph(nodes, edges);
}

AnalysisGraph AnalysisGraph::from_projection(const ProjectedGraph& graph) {
    AnalysisGraph out(graph.nodes, graph.edges);
    out.symmetrized_ = graph.directed;
    return out;
}

int AnalysisGraph::index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

double AnalysisGraph::strength(int v) const {
    double s = 0.0;
    for (const auto& [to, w] : neighbors(v)) {
        (void)to;
        s += w;
    }
    return s;
}

// ---- components / paths ----------------------------------------------------

namespace {

std::vector<int> component_labels(const AnalysisGraph& g, const std::vector<char>* alive,
                                  std::vector<std::size_t>* sizes) {
    const int n = static_cast<int>(g.node_count());
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        if (alive && !(*alive)[static_cast<std::size_t>(s)]) continue;
        std::size_t count = 0;
        std::deque<int> queue{s};
        label[static_cast<std::size_t>(s)] = next;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            ++count;
            for (const auto& [to, w] : g.neighbors(v)) {
                (void)w;
                if (alive && !(*alive)[static_cast<std::size_t>(to)]) continue;
                if (label[static_cast<std::size_t>(to)] == -1) {
                    label[static_cast<std::size_t>(to)] = next;
                    queue.push_back(to);
                }
            }
        }
        if (sizes) sizes->push_back(count);
        ++next;
    }
    return label;
}

std::size_t largest_component_size(const AnalysisGraph& g, const std::vector<char>* alive) {
    std::vector<std::size_t> sizes;
    component_labels(g, alive, &sizes);
    std::size_t best = 0;
    for (std::size_t s : sizes) best = std::max(best, s);
    return best;
}

}  // namespace

// ---- summary metrics ---------------------------------------------------------

MetricsReport summary_metrics(const AnalysisGraph& g, std::uint64_t seed) {
    MetricsReport report;
    report.node_count = g.node_count();
    report.edge_count = g.edge_count();
    report.symmetrized_input = g.symmetrized();

    const int n = static_cast<int>(g.node_count());
    for (int v = 0; v < n; ++v) report.degree_histogram[g.degree(v)] += 1;

    ModularityResult mod = modularity_communities(g, seed);
    report.modularity_defined = mod.defined;
    report.modularity_q = mod.q;
    report.communities = std::move(mod.assignment);

    if (n == 0) return report;

    std::vector<std::size_t> sizes;
    std::vector<int> label = component_labels(g, nullptr, &sizes);
    int lcc = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (sizes[c] > sizes[static_cast<std::size_t>(lcc)]) lcc = static_cast<int>(c);
    }
    report.largest_component = sizes[static_cast<std::size_t>(lcc)];

    if (report.largest_component >= 2) {
        long long pair_sum = 0;
        long long pairs = 0;
        int diameter = 0;
        std::vector<int> dist(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            if (label[static_cast<std::size_t>(s)] != lcc) continue;
            std::fill(dist.begin(), dist.end(), -1);
            dist[static_cast<std::size_t>(s)] = 0;
            std::deque<int> queue{s};
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (const auto& [to, w] : g.neighbors(v)) {
                    (void)w;
                    if (dist[static_cast<std::size_t>(to)] == -1) {
                        dist[static_cast<std::size_t>(to)] =
                            dist[static_cast<std::size_t>(v)] + 1;
                        queue.push_back(to);
                    }
                }
            }
            for (int t = 0; t < n; ++t) {
                if (t == s || label[static_cast<std::size_t>(t)] != lcc) continue;
                pair_sum += dist[static_cast<std::size_t>(t)];
                diameter = std::max(diameter, dist[static_cast<std::size_t>(t)]);
                ++pairs;
            }
        }
        report.path_metrics_defined = true;
        report.diameter = diameter;
        report.avg_path_length = static_cast<double>(pair_sum) / static_cast<double>(pairs);
    }

    // mean local clustering; degree < 2 contributes 0
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
        int k = g.degree(v);
        if (k < 2) continue;
        const auto& nv = g.neighbors(v);
        int links = 0;
        for (std::size_t i = 0; i < nv.size(); ++i) {
            for (std::size_t j = i + 1; j < nv.size(); ++j) {
                int a = nv[i].first;
                int b = nv[j].first;
                const auto& na = g.neighbors(a);
                if (std::binary_search(
                        na.begin(), na.end(), std::make_pair(b, 0.0),
                        [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; })) {
                    ++links;
                }
            }
        }
        total += 2.0 * static_cast<double>(links) /
                 (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    report.avg_clustering = n > 0 ? total / static_cast<double>(n) : 0.0;

    return report;
}

// ---- disparity filter --------------------------------------------------------

BackboneResult disparity_backbone(const AnalysisGraph& g, double alpha,
                                  bool keep_degree_one) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("significance level must be in (0, 1]");
    }
    for (const auto& [u, v, w] : g.edges()) {
        if (!(w > 0.0)) {
            throw std::invalid_argument("non-positive weight on edge " + g.name(u) +
                                        " -- " + g.name(v));
        }
    }

    BackboneResult result;
    result.alpha = alpha;
    result.total_nodes = g.node_count();
    result.total_edges = g.edge_count();

    auto judge = [&](int node, double w) -> double {
        int k = g.degree(node);
        if (k <= 1) return 2.0;  // degree-1 endpoints never judge
        double p = w / g.strength(node);
        return std::pow(1.0 - p, k - 1);
    };

    std::set<std::string> retained_nodes;
    for (const auto& [u, v, w] : g.edges()) {
        double au = judge(u, w);
        double av = judge(v, w);
        bool keep;
        double significance;
        if (au > 1.0 && av > 1.0) {
            keep = keep_degree_one;
            significance = 1.0;
        } else {
            significance = std::min(au, av);
            keep = significance < alpha;
        }
        if (!keep) continue;
        result.retained.push_back({g.name(u), g.name(v), w, significance});
        retained_nodes.insert(g.name(u));
        retained_nodes.insert(g.name(v));
    }

    if (result.total_nodes > 0) {
        result.node_retention = static_cast<double>(retained_nodes.size()) /
                                static_cast<double>(result.total_nodes);
    }
    if (result.total_edges > 0) {
        result.edge_retention = static_cast<double>(result.retained.size()) /
                                static_cast<double>(result.total_edges);
    }
    return result;
}

// ---- modularity --------------------------------------------------------------

double modularity_of(const AnalysisGraph& g,
                     const std::map<std::string, int>& assignment) {
    double m = 0.0;
    for (const auto& [u, v, w] : g.edges()) {
        (void)u;
        (void)v;
        m += w;
    }
    if (m <= 0.0) return 0.0;

    auto community = [&](int v) {
        auto it = assignment.find(g.name(v));
        return it == assignment.end() ? -(v + 1) : it->second;
    };

    double intra = 0.0;
    std::map<int, double> community_strength;
    for (const auto& [u, v, w] : g.edges()) {
        if (community(u) == community(v)) intra += w;
    }
    for (int v = 0; v < static_cast<int>(g.node_count()); ++v) {
        community_strength[community(v)] += g.strength(v);
    }

    double q = intra / m;
    for (const auto& [c, s] : community_strength) {
        (void)c;
        double a = s / (2.0 * m);
        q -= a * a;
    }
    return q;
}

namespace {

// One aggregation level for the greedy maximization.
struct Level {
    std::vector<std::map<int, double>> adj;  // neighbor -> weight, no self entries
    std::vector<double> self_loop;           // intra weight folded into a super node
    double total_weight = 0.0;               // m: edges once + self loops
};

std::vector<int> local_moving(const Level& level, std::mt19937_64& rng, bool* moved_any) {
    const int n = static_cast<int>(level.adj.size());
    std::vector<int> community(static_cast<std::size_t>(n));
    std::iota(community.begin(), community.end(), 0);

    std::vector<double> strength(static_cast<std::size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        double s = 2.0 * level.self_loop[static_cast<std::size_t>(v)];
        for (const auto& [to, w] : level.adj[static_cast<std::size_t>(v)]) {
            (void)to;
            s += w;
        }
        strength[static_cast<std::size_t>(v)] = s;
    }
    std::vector<double> community_strength = strength;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    deterministic_shuffle(order, rng);

    const double two_m = 2.0 * level.total_weight;
    *moved_any = false;
    bool improved = true;
    int guard = 0;
    while (improved && guard++ < 128) {
        improved = false;
        for (int v : order) {
            int current = community[static_cast<std::size_t>(v)];
            std::map<int, double> weight_to;  // community -> edge weight from v
            weight_to[current] += 0.0;
            for (const auto& [to, w] : level.adj[static_cast<std::size_t>(v)]) {
                weight_to[community[static_cast<std::size_t>(to)]] += w;
            }
            community_strength[static_cast<std::size_t>(current)] -=
                strength[static_cast<std::size_t>(v)];

            int best = current;
            double best_gain = weight_to[current] -
                               community_strength[static_cast<std::size_t>(current)] *
                                   strength[static_cast<std::size_t>(v)] / two_m;
            for (const auto& [c, w] : weight_to) {
                double gain = w - community_strength[static_cast<std::size_t>(c)] *
                                      strength[static_cast<std::size_t>(v)] / two_m;
                if (gain > best_gain + 1e-12 || (gain > best_gain - 1e-12 && c < best)) {
                    best = c;
                    best_gain = gain;
                }
            }
            community_strength[static_cast<std::size_t>(best)] +=
                strength[static_cast<std::size_t>(v)];
            if (best != current) {
                community[static_cast<std::size_t>(v)] = best;
                improved = true;
                *moved_any = true;
            }
        }
    }
    return community;
}

// Renumber communities to 0..k-1 in order of first appearance.
std::vector<int> compact_labels(const std::vector<int>& raw, int* count) {
    std::map<int, int> remap;
    std::vector<int> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, inserted] = remap.emplace(raw[i], static_cast<int>(remap.size()));
        (void)inserted;
        out[i] = it->second;
    }
    *count = static_cast<int>(remap.size());
    return out;
}

}  // namespace

ModularityResult modularity_communities(const AnalysisGraph& g, std::uint64_t seed) {
    ModularityResult result;
    const int n = static_cast<int>(g.node_count());
    if (g.edge_count() == 0) {
        for (int v = 0; v < n; ++v) result.assignment[g.name(v)] = v;
        return result;  // Q undefined
    }

    Level level;
    level.adj.resize(static_cast<std::size_t>(n));
    level.self_loop.assign(static_cast<std::size_t>(n), 0.0);
    for (const auto& [u, v, w] : g.edges()) {
        level.adj[static_cast<std::size_t>(u)][v] += w;
        level.adj[static_cast<std::size_t>(v)][u] += w;
        level.total_weight += w;
    }

    // node -> community of the original graph, composed across levels
    std::vector<int> membership(static_cast<std::size_t>(n));
    std::iota(membership.begin(), membership.end(), 0);

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    for (int round = 0; round < 64; ++round) {
        bool moved = false;
        std::vector<int> community = local_moving(level, rng, &moved);
        if (!moved) break;

        int count = 0;
        community = compact_labels(community, &count);
        for (int& c : membership) c = community[static_cast<std::size_t>(c)];

        // aggregate
        Level next;
        next.adj.resize(static_cast<std::size_t>(count));
        next.self_loop.assign(static_cast<std::size_t>(count), 0.0);
        next.total_weight = level.total_weight;
        for (std::size_t v = 0; v < level.adj.size(); ++v) {
            int cv = community[v];
            next.self_loop[static_cast<std::size_t>(cv)] += level.self_loop[v];
            for (const auto& [to, w] : level.adj[v]) {
                int ct = community[static_cast<std::size_t>(to)];
                if (static_cast<int>(v) < to) {
                    if (cv == ct) {
                        next.self_loop[static_cast<std::size_t>(cv)] += w;
                    } else {
                        next.adj[static_cast<std::size_t>(cv)][ct] += w;
                        next.adj[static_cast<std::size_t>(ct)][cv] += w;
                    }
                }
            }
        }
        if (static_cast<int>(level.adj.size()) == count) {
            level = std::move(next);
            break;  // no aggregation progress
        }
        level = std::move(next);
    }

    int count = 0;
    membership = compact_labels(membership, &count);
    for (int v = 0; v < n; ++v) {
        result.assignment[g.name(v)] = membership[static_cast<std::size_t>(v)];
    }
    result.defined = true;
    result.q = modularity_of(g, result.assignment);
    return result;
}

// ---- betweenness -------------------------------------------------------------

namespace {

std::vector<double> brandes(const AnalysisGraph& g, const std::vector<char>* alive) {
    const int n = static_cast<int>(g.node_count());
    std::vector<double> centrality(static_cast<std::size_t>(n), 0.0);

    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    for (int s = 0; s < n; ++s) {
        if (alive && !(*alive)[static_cast<std::size_t>(s)]) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : pred) p.clear();
        order.clear();

        dist[static_cast<std::size_t>(s)] = 0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (const auto& [to, w] : g.neighbors(v)) {
                (void)w;
                if (alive && !(*alive)[static_cast<std::size_t>(to)]) continue;
                if (dist[static_cast<std::size_t>(to)] < 0) {
                    dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(to);
                }
                if (dist[static_cast<std::size_t>(to)] ==
                    dist[static_cast<std::size_t>(v)] + 1) {
                    sigma[static_cast<std::size_t>(to)] += sigma[static_cast<std::size_t>(v)];
                    pred[static_cast<std::size_t>(to)].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : pred[static_cast<std::size_t>(w)]) {
                delta[static_cast<std::size_t>(v)] +=
                    sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
                    (1.0 + delta[static_cast<std::size_t>(w)]);
            }
            if (w != s) centrality[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }
    // each unordered pair was accumulated from both endpoints
    for (double& c : centrality) c /= 2.0;
    return centrality;
}

}  // namespace

std::map<std::string, double> betweenness(const AnalysisGraph& g) {
    std::vector<double> centrality = brandes(g, nullptr);
    std::map<std::string, double> out;
    for (int v = 0; v < static_cast<int>(g.node_count()); ++v) {
        out[g.name(v)] = centrality[static_cast<std::size_t>(v)];
    }
    return out;
}

// ---- resilience ----------------------------------------------------------------

ResilienceCurve resilience(const AnalysisGraph& g, RemovalStrategy strategy,
                           double step_fraction, std::uint64_t seed) {
    if (!(step_fraction > 0.0) || step_fraction > 0.5) {
        throw std::invalid_argument("step fraction must be in (0, 0.5]");
    }
    ResilienceCurve curve;
    curve.strategy = strategy;
    curve.seed = seed;

    const int n = static_cast<int>(g.node_count());
    if (n == 0) return curve;

    const double lcc0 = static_cast<double>(largest_component_size(g, nullptr));
    curve.points.emplace_back(0.0, 1.0);

    const int batch =
        std::max(1, static_cast<int>(std::ceil(step_fraction * static_cast<double>(n))));

    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> random_order;
    if (strategy == RemovalStrategy::Random) {
        random_order.resize(static_cast<std::size_t>(n));
        std::iota(random_order.begin(), random_order.end(), 0);
        std::mt19937_64 rng(seed);
        deterministic_shuffle(random_order, rng);
    }
    std::size_t random_cursor = 0;

    int removed = 0;
    while (removed < n) {
        int take = std::min(batch, n - removed);
        if (strategy == RemovalStrategy::Targeted) {
            std::vector<double> bc = brandes(g, &alive);
            std::vector<int> candidates;
            for (int v = 0; v < n; ++v) {
                if (alive[static_cast<std::size_t>(v)]) candidates.push_back(v);
            }
            std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
                if (bc[static_cast<std::size_t>(a)] != bc[static_cast<std::size_t>(b)]) {
                    return bc[static_cast<std::size_t>(a)] > bc[static_cast<std::size_t>(b)];
                }
                return a < b;  // ties broken by node-id order
            });
            for (int i = 0; i < take; ++i) {
                alive[static_cast<std::size_t>(candidates[static_cast<std::size_t>(i)])] = 0;
            }
        } else {
            int taken = 0;
            while (taken < take && random_cursor < random_order.size()) {
                int v = random_order[random_cursor++];
                if (alive[static_cast<std::size_t>(v)]) {
                    alive[static_cast<std::size_t>(v)] = 0;
                    ++taken;
                }
            }
        }
        removed += take;
        double lcc = static_cast<double>(largest_component_size(g, &alive));
        curve.points.emplace_back(static_cast<double>(removed) / static_cast<double>(n),
                                  lcc0 > 0.0 ? lcc / lcc0 : 0.0);
    }
    return curve;
}

}  // namespace dappnet
