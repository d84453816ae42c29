#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexidim/vertex_set.hpp"

namespace lexidim {

using Edge = std::pair<Vertex, Vertex>;

// Hop counts between every ordered pair of vertices. Pairs in different
// components hold kInfinite.
class DistanceMatrix {
public:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

    DistanceMatrix() = default;
    DistanceMatrix(std::size_t order, std::vector<std::uint32_t> entries)
        : order_(order), entries_(std::move(entries)) {}

    std::size_t order() const noexcept { return order_; }
    std::uint32_t operator()(Vertex u, Vertex v) const { return entries_[u * order_ + v]; }
    std::span<const std::uint32_t> row(Vertex u) const {
        return {entries_.data() + u * order_, order_};
    }
    bool finite(Vertex u, Vertex v) const { return (*this)(u, v) != kInfinite; }

    // Largest finite entry.
    std::uint32_t max_finite() const;

private:
    std::size_t order_ = 0;
    std::vector<std::uint32_t> entries_;
};

// Immutable simple undirected graph on vertices 0..order-1. Distances are
// computed once at construction and shared between copies.
class Graph {
public:
    // Rejects order 0, out-of-range endpoints and self-loops; duplicate
    // edges collapse.
    Graph(std::size_t order, std::span<const Edge> edges,
          std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    // Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return matrix_[u * order() + v] != 0; }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const DistanceMatrix& distances() const noexcept { return *distances_; }
    std::uint32_t distance(Vertex u, Vertex v) const { return (*distances_)(u, v); }
    bool connected() const noexcept { return connected_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    // Display name; the index when the graph carries no labels.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Structural equality: labels are display-only and ignored.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
    std::shared_ptr<const DistanceMatrix> distances_;
    bool connected_ = false;
};

Graph build_graph(std::size_t order, std::span<const Edge> edges);

// u ~ v in the result iff u != v and u, v are non-adjacent in g.
Graph complement(const Graph& g);

// Disjoint union of g and h (h shifted by order(g)) plus every cross edge.
Graph join(const Graph& g, const Graph& h);

// Lexicographic product g[h]. Vertex (i, j) sits at flat index i*m + j,
// m = order(h); (i,j) ~ (r,s) iff i ~ r in g, or i == r and j ~ s in h.
Graph lex_product(const Graph& g, const Graph& h);

DistanceMatrix distances(const Graph& g);
bool is_connected(const Graph& g);

// Named families, in the canonical vertex order of each walk / part list.
namespace family {

Graph path(std::size_t n);
Graph cycle(std::size_t n);  // n >= 3
Graph complete(std::size_t n);
Graph empty(std::size_t n);
// Parts are laid out contiguously in the given order.
Graph complete_multipartite(std::span<const std::size_t> parts);
// cycle(n) joined with a hub; the hub is vertex n.
Graph wheel(std::size_t n);
// path(n) joined with a hub; the hub is vertex n.
Graph fan(std::size_t n);

}  // namespace family

}  // namespace lexidim
