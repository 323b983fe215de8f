#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dirhom/decimal.hpp"
#include "dirhom/errors.hpp"

namespace dirhom {

// Vertex ids are dense integers 0..V-1; external labels live in the CLI only.
using VertexId = std::int32_t;
using Arc = std::pair<VertexId, VertexId>;
using Index = std::int64_t;

/**
 * Finite simple directed graph: no self-loops, no duplicate arcs. Reciprocal
 * pairs (u,v) and (v,u) are legal. Immutable after construction; the arc list
 * and adjacency are sorted, so identical inputs give identical layouts.
 */
class Digraph {
public:
    Digraph() = default;  // zero vertices
    static Digraph from_edge_list(VertexId vertex_count, const std::vector<Arc>& arcs);

    VertexId vertex_count() const { return vertex_count_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    Index arc_count() const { return static_cast<Index>(arcs_.size()); }
    const std::vector<VertexId>& out_neighbors(VertexId v) const {
        return out_[static_cast<std::size_t>(v)];
    }
    bool has_arc(VertexId from, VertexId to) const;

private:
    VertexId vertex_count_ = 0;
    std::vector<Arc> arcs_;                   // lexicographically sorted
    std::vector<std::vector<VertexId>> out_;  // sorted target lists
};

/** Undirected simple graph; edges stored with endpoints ordered u < v. */
class UndirectedGraph {
public:
    UndirectedGraph(VertexId vertex_count, std::vector<Arc> edges);

    VertexId vertex_count() const { return vertex_count_; }
    const std::vector<Arc>& edges() const { return edges_; }
    Index edge_count() const { return static_cast<Index>(edges_.size()); }
    const std::vector<VertexId>& neighbors(VertexId v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

private:
    VertexId vertex_count_;
    std::vector<Arc> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

/**
 * Layer widths (n_1, ..., n_L) of a fully connected feedforward architecture.
 * Vertices are numbered layer by layer: layer i occupies the contiguous range
 * [layer_offset(i), layer_offset(i) + width(i)).
 */
class MlpSpec {
public:
    explicit MlpSpec(std::vector<int> widths);  // throws BadWidth

    int layer_count() const { return static_cast<int>(widths_.size()); }
    int width(int layer) const { return widths_[static_cast<std::size_t>(layer)]; }
    const std::vector<int>& widths() const { return widths_; }
    VertexId total_vertices() const { return offsets_.back(); }
    VertexId layer_offset(int layer) const { return offsets_[static_cast<std::size_t>(layer)]; }
    VertexId vertex(int layer, int k) const { return layer_offset(layer) + k; }
    Index total_arcs() const;
    Index kernel_dimension() const;  // prod_i (n_i - 1)

private:
    std::vector<int> widths_;
    std::vector<VertexId> offsets_;  // size L+1
};

/** Digraph plus one exact decimal weight per arc, aligned with arcs(). */
class WeightedDigraph {
public:
    WeightedDigraph(Digraph digraph, std::vector<Decimal> weights_in_arc_order);
    static WeightedDigraph from_edge_list(VertexId vertex_count,
                                          const std::vector<std::pair<Arc, Decimal>>& arcs);

    const Digraph& digraph() const { return digraph_; }
    const std::vector<Decimal>& weights() const { return weights_; }

private:
    Digraph digraph_;
    std::vector<Decimal> weights_;  // weights_[i] belongs to digraph_.arcs()[i]
};

Digraph mlp_digraph(const MlpSpec& spec);

UndirectedGraph underlying_undirected(const Digraph& g);

// Max arc count over all directed paths; nullopt when g has a cycle.
std::optional<int> longest_path_length(const Digraph& g);

struct Components {
    int count = 0;
    std::vector<int> labels;  // component ids in order of smallest member vertex
};
Components connected_components(const UndirectedGraph& g);

bool has_reciprocal_arcs(const Digraph& g);

// Erdos-Renyi style digraph from a fixed seed: 1..max_vertices vertices, each
// ordered pair an arc with probability arc_percent/100. Uses raw mt19937_64
// output so the draw is identical on every platform.
Digraph random_digraph(std::uint64_t seed, int max_vertices = 7, int arc_percent = 30);

}  // namespace dirhom
