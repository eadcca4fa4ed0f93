#include "commgraph/commuting_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <thread>

#include "commgraph/error.hpp"

namespace commgraph::graph {

CommutingGraph CommutingGraph::build(const grp::GroupPtr& g)
{
    const std::size_t n = g->order();
    const grp::SubgroupHandle z = grp::center(g);
    if (z.order() == n) throw Error(ErrorCode::EmptyGraph, "group is abelian; every element is central");

    CommutingGraph graph;
    graph.group_ = g;
    graph.class_of_.assign(n, kNoClass);
    graph.vertex_count_ = n - z.order();

    const std::size_t words = (n + 63) / 64;
    std::map<std::vector<std::uint64_t>, std::vector<std::uint32_t>> by_centralizer;
    std::vector<std::uint64_t> bits(words);
    for (std::uint32_t x = 0; x < n; ++x) {
        if (z.contains(x)) continue;
        std::fill(bits.begin(), bits.end(), 0);
        for (std::uint32_t y = 0; y < n; ++y) {
            if (g->commute(x, y)) bits[y / 64] |= std::uint64_t{1} << (y % 64);
        }
        by_centralizer[bits].push_back(x);
    }

    const auto& rank = g->canonical_rank();
    for (auto& [key, members] : by_centralizer) {
        CentralizerClass c;
        c.members = std::move(members);
        c.rep = *std::min_element(c.members.begin(), c.members.end(),
                                  [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });
        graph.classes_.push_back(std::move(c));
    }
    std::sort(graph.classes_.begin(), graph.classes_.end(),
              [&](const CentralizerClass& a, const CentralizerClass& b) { return rank[a.rep] < rank[b.rep]; });

    const std::size_t k = graph.classes_.size();
    for (std::uint32_t c = 0; c < k; ++c) {
        for (auto m : graph.classes_[c].members) graph.class_of_[m] = c;
    }
    graph.adjacency_.assign(k, {});
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = i + 1; j < k; ++j) {
            if (g->commute(graph.classes_[i].rep, graph.classes_[j].rep)) {
                graph.adjacency_[i].push_back(j);
                graph.adjacency_[j].push_back(i);
            }
        }
    }
    for (auto& adj : graph.adjacency_) std::sort(adj.begin(), adj.end());
    return graph;
}

std::size_t CommutingGraph::edge_count() const
{
    std::size_t edges = 0;
    for (std::uint32_t i = 0; i < classes_.size(); ++i) {
        const std::size_t si = classes_[i].members.size();
        edges += si * (si - 1) / 2;
        for (auto j : adjacency_[i]) {
            if (j > i) edges += si * classes_[j].members.size();
        }
    }
    return edges;
}

std::uint32_t CommutingGraph::class_of(std::uint32_t element) const
{
    if (element >= class_of_.size() || class_of_[element] == kNoClass) {
        throw Error(ErrorCode::NotAVertex, "element is central or outside the group");
    }
    return class_of_[element];
}

bool CommutingGraph::adjacent(std::uint32_t a, std::uint32_t b) const
{
    if (a == b) return false;
    const std::uint32_t ca = class_of(a);
    const std::uint32_t cb = class_of(b);
    if (ca == cb) return true;
    return std::binary_search(adjacency_[ca].begin(), adjacency_[ca].end(), cb);
}

namespace {

constexpr std::uint64_t kUnreached = ~std::uint64_t{0};

// BFS over the class quotient; neighbours are scanned in ascending class
// index, so parents (and witness paths) are reproducible.
std::vector<std::uint64_t> class_bfs(const CommutingGraph& graph, std::uint32_t source,
                                     std::vector<std::uint32_t>* parent = nullptr)
{
    const auto& adj = graph.class_adjacency();
    std::vector<std::uint64_t> dist(adj.size(), kUnreached);
    if (parent) parent->assign(adj.size(), ~0u);
    std::deque<std::uint32_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const std::uint32_t c = queue.front();
        queue.pop_front();
        for (auto d : adj[c]) {
            if (dist[d] != kUnreached) continue;
            dist[d] = dist[c] + 1;
            if (parent) (*parent)[d] = c;
            queue.push_back(d);
        }
    }
    return dist;
}

}  // namespace

DistanceReport distance(const CommutingGraph& graph, std::uint32_t x, std::uint32_t y)
{
    DistanceReport report;
    report.source = x;
    report.target = y;
    const std::uint32_t cx = graph.class_of(x);
    const std::uint32_t cy = graph.class_of(y);
    if (x == y) {
        report.distance = 0;
        report.path = {x};
        return report;
    }
    if (cx == cy) {
        report.distance = 1;
        report.path = {x, y};
        return report;
    }
    std::vector<std::uint32_t> parent;
    const auto dist = class_bfs(graph, cx, &parent);
    if (dist[cy] == kUnreached) return report;
    report.distance = dist[cy];
    std::vector<std::uint32_t> classes;
    for (std::uint32_t c = cy; c != cx; c = parent[c]) classes.push_back(c);
    std::reverse(classes.begin(), classes.end());
    report.path.push_back(x);
    for (std::size_t i = 0; i + 1 < classes.size(); ++i) report.path.push_back(graph.classes()[classes[i]].rep);
    report.path.push_back(y);
    return report;
}

DistanceReport distance(const CommutingGraph& graph, const grp::GroupElement& x, const grp::GroupElement& y)
{
    auto ix = graph.group()->index_of(x);
    auto iy = graph.group()->index_of(y);
    if (!ix || !iy) throw Error(ErrorCode::NotAVertex, "element is outside the group");
    return distance(graph, *ix, *iy);
}

GraphSummary diameter_and_components(const CommutingGraph& graph, unsigned jobs)
{
    const auto k = static_cast<std::uint32_t>(graph.classes().size());
    GraphSummary summary;

    std::vector<char> seen(k, 0);
    for (std::uint32_t c = 0; c < k; ++c) {
        if (seen[c]) continue;
        const auto dist = class_bfs(graph, c);
        std::vector<std::uint32_t> comp;
        for (std::uint32_t d = 0; d < k; ++d) {
            if (dist[d] != kUnreached) {
                comp.push_back(d);
                seen[d] = 1;
            }
        }
        summary.components.push_back(std::move(comp));
    }
    if (summary.components.size() != 1) return summary;

    std::uint64_t diameter = 0;
    for (const auto& c : graph.classes()) {
        if (c.members.size() > 1) diameter = 1;
    }
    jobs = std::max(1u, std::min(jobs, k));
    std::vector<std::uint64_t> local(jobs, 0);
    auto worker = [&](unsigned w) {
        for (std::uint32_t c = w; c < k; c += jobs) {
            const auto dist = class_bfs(graph, c);
            local[w] = std::max(local[w], *std::max_element(dist.begin(), dist.end()));
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (auto v : local) diameter = std::max(diameter, v);
    summary.diameter = diameter;
    return summary;
}

nlohmann::json export_json(const CommutingGraph& graph, const GraphSummary& summary)
{
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : graph.classes()) {
        classes.push_back({{"size", c.members.size()}, {"rep", grp::to_json(graph.group()->element(c.rep))}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (std::uint32_t i = 0; i < graph.class_adjacency().size(); ++i) {
        for (auto j : graph.class_adjacency()[i]) {
            if (j > i) edges.push_back({i, j});
        }
    }
    nlohmann::json out{{"classes", std::move(classes)},
                       {"edges", std::move(edges)},
                       {"components", summary.components.size()}};
    out["diameter"] = summary.diameter ? nlohmann::json(*summary.diameter) : nlohmann::json(nullptr);
    return out;
}

}  // namespace commgraph::graph
