#include "dirhom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

namespace dirhom {
namespace {

void check_endpoint(VertexId v, VertexId vertex_count) {
    if (v < 0 || v >= vertex_count)
        throw BadVertex("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(vertex_count) + ")");
}

}  // namespace

Digraph Digraph::from_edge_list(VertexId vertex_count, const std::vector<Arc>& arcs) {
    if (vertex_count < 0) throw BadVertex("negative vertex count");
    Digraph g;
    g.vertex_count_ = vertex_count;
    g.arcs_ = arcs;
    for (const Arc& a : g.arcs_) {
        check_endpoint(a.first, vertex_count);
        check_endpoint(a.second, vertex_count);
        if (a.first == a.second)
            throw SelfLoopRejected("self-loop at vertex " + std::to_string(a.first));
    }
    std::sort(g.arcs_.begin(), g.arcs_.end());
    auto dup = std::adjacent_find(g.arcs_.begin(), g.arcs_.end());
    if (dup != g.arcs_.end())
        throw DuplicateArc("duplicate arc " + std::to_string(dup->first) + " -> " +
                           std::to_string(dup->second));
    g.out_.resize(static_cast<std::size_t>(vertex_count));
    for (const Arc& a : g.arcs_) g.out_[static_cast<std::size_t>(a.first)].push_back(a.second);
    return g;
}

bool Digraph::has_arc(VertexId from, VertexId to) const {
    if (from < 0 || from >= vertex_count_) return false;
    const auto& nbrs = out_[static_cast<std::size_t>(from)];
    return std::binary_search(nbrs.begin(), nbrs.end(), to);
}

UndirectedGraph::UndirectedGraph(VertexId vertex_count, std::vector<Arc> edges)
    : vertex_count_(vertex_count) {
    for (Arc& e : edges) {
        check_endpoint(e.first, vertex_count);
        check_endpoint(e.second, vertex_count);
        if (e.first == e.second)
            throw SelfLoopRejected("self-loop at vertex " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.resize(static_cast<std::size_t>(vertex_count));
    for (const Arc& e : edges_) {
        adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

MlpSpec::MlpSpec(std::vector<int> widths) : widths_(std::move(widths)) {
    if (widths_.empty()) throw BadWidth("at least one layer required");
    offsets_.push_back(0);
    for (int w : widths_) {
        if (w < 1) throw BadWidth("layer width must be positive, got " + std::to_string(w));
        offsets_.push_back(offsets_.back() + w);
    }
}

Index MlpSpec::total_arcs() const {
    Index e = 0;
    for (std::size_t i = 0; i + 1 < widths_.size(); ++i)
        e += static_cast<Index>(widths_[i]) * widths_[i + 1];
    return e;
}

Index MlpSpec::kernel_dimension() const {
    Index k = 1;
    for (int w : widths_) k *= w - 1;
    return k;
}

WeightedDigraph::WeightedDigraph(Digraph digraph, std::vector<Decimal> weights_in_arc_order)
    : digraph_(std::move(digraph)), weights_(std::move(weights_in_arc_order)) {
    if (static_cast<Index>(weights_.size()) != digraph_.arc_count())
        throw BadVertex("weight count does not match arc count");
}

WeightedDigraph WeightedDigraph::from_edge_list(
    VertexId vertex_count, const std::vector<std::pair<Arc, Decimal>>& arcs) {
    std::vector<std::pair<Arc, Decimal>> sorted = arcs;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Arc> bare;
    std::vector<Decimal> weights;
    bare.reserve(sorted.size());
    weights.reserve(sorted.size());
    for (auto& [arc, w] : sorted) {
        bare.push_back(arc);
        weights.push_back(std::move(w));
    }
    return WeightedDigraph(Digraph::from_edge_list(vertex_count, bare), std::move(weights));
}

Digraph mlp_digraph(const MlpSpec& spec) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(spec.total_arcs()));
    for (int layer = 0; layer + 1 < spec.layer_count(); ++layer)
        for (int a = 0; a < spec.width(layer); ++a)
            for (int b = 0; b < spec.width(layer + 1); ++b)
                arcs.emplace_back(spec.vertex(layer, a), spec.vertex(layer + 1, b));
    return Digraph::from_edge_list(spec.total_vertices(), arcs);
}

UndirectedGraph underlying_undirected(const Digraph& g) {
    return UndirectedGraph(g.vertex_count(), g.arcs());
}

std::optional<int> longest_path_length(const Digraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> indegree(n, 0);
    for (const Arc& a : g.arcs()) ++indegree[static_cast<std::size_t>(a.second)];

    // Kahn order; `dist[v]` = longest arc count of a path ending at v.
    std::vector<VertexId> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(static_cast<VertexId>(v));
    std::vector<int> dist(n, 0);
    std::size_t processed = 0;
    int best = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        ++processed;
        for (VertexId w : g.out_neighbors(v)) {
            dist[static_cast<std::size_t>(w)] =
                std::max(dist[static_cast<std::size_t>(w)], dist[static_cast<std::size_t>(v)] + 1);
            best = std::max(best, dist[static_cast<std::size_t>(w)]);
            if (--indegree[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
        }
    }
    if (processed != n) return std::nullopt;  // cycle
    return best;
}

Components connected_components(const UndirectedGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Components comps;
    comps.labels.assign(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (comps.labels[start] >= 0) continue;
        int id = comps.count++;
        std::queue<VertexId> bfs;
        bfs.push(static_cast<VertexId>(start));
        comps.labels[start] = id;
        while (!bfs.empty()) {
            VertexId v = bfs.front();
            bfs.pop();
            for (VertexId w : g.neighbors(v)) {
                if (comps.labels[static_cast<std::size_t>(w)] < 0) {
                    comps.labels[static_cast<std::size_t>(w)] = id;
                    bfs.push(w);
                }
            }
        }
    }
    return comps;
}

bool has_reciprocal_arcs(const Digraph& g) {
    for (const Arc& a : g.arcs())
        if (a.first < a.second && g.has_arc(a.second, a.first)) return true;
    return false;
}

Digraph random_digraph(std::uint64_t seed, int max_vertices, int arc_percent) {
    std::mt19937_64 rng(seed);
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng() % 100 < static_cast<std::uint64_t>(arc_percent)) arcs.emplace_back(u, v);
        }
    return Digraph::from_edge_list(static_cast<VertexId>(n), arcs);
}

}  // namespace dirhom
