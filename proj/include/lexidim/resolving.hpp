#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lexidim/graph.hpp"
#include "lexidim/vertex_set.hpp"

namespace lexidim {

// metric: coordinates are hop counts. adjacency: 0 (same vertex),
// 1 (adjacent), 2 (not adjacent).
enum class RepKind { metric, adjacency };

std::string_view to_string(RepKind kind);

struct RepVector {
    RepKind kind = RepKind::metric;
    std::vector<std::uint32_t> coords;

    friend bool operator==(const RepVector&, const RepVector&) = default;
};

// Order limits for the exact solvers. Both are at most 64 because subsets
// are encoded as machine words.
struct SearchCaps {
    std::size_t search_order = 24;
    std::size_t enumeration_order = 12;
};

inline constexpr std::size_t kMaxCap = 64;

struct DimensionResult {
    std::size_t value = 0;
    VertexSet witness;  // lexicographically smallest optimum
    std::optional<std::vector<VertexSet>> all_bases;
};

// 0 if v == w, 1 if v ~ w, 2 otherwise.
std::uint32_t adjacency_code(const Graph& g, Vertex v, Vertex w);

RepVector metric_representation(const Graph& g, Vertex v, const VertexSet& w);
RepVector adjacency_representation(const Graph& g, Vertex v, const VertexSet& w);
RepVector representation(const Graph& g, Vertex v, const VertexSet& w, RepKind kind);

// Pairwise distinct representations for all vertices. Empty sets never
// resolve. Metric kind rejects disconnected graphs.
bool is_resolving(const Graph& g, const VertexSet& w, RepKind kind);

// Pairwise distinct representations over the members of t.
bool resolves_subset(const Graph& g, const VertexSet& w, const VertexSet& t, RepKind kind);

// max(1, twin bound, and for adjacency the least k with 2^k >= n - k).
std::size_t lower_bound(const Graph& g, RepKind kind);

// Exact minimum resolving set by cardinality-ascending search. Throws
// CapExceeded when order(g) exceeds caps.search_order (or
// caps.enumeration_order with enumerate_all). Rejects order-1 graphs.
DimensionResult dimension(const Graph& g, RepKind kind, bool enumerate_all = false,
                          const SearchCaps& caps = {});

// Every minimum resolving set of the given kind, in lexicographic order.
std::vector<VertexSet> enumerate_bases(const Graph& g, RepKind kind, const SearchCaps& caps = {});

std::vector<VertexSet> enumerate_adjacency_bases(const Graph& g, const SearchCaps& caps = {});

}  // namespace lexidim
