#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "lexidim/graph.hpp"
#include "lexidim/vertex_set.hpp"

namespace lexidim {

// Size-1 class, clique of size >= 2, or independent set of size >= 2.
enum class TwinType { single, clique, independent };

std::string_view to_string(TwinType type);

struct TwinPartition {
    std::vector<VertexSet> classes;       // ordered by smallest member
    std::vector<TwinType> types;          // parallel to classes
    std::vector<std::size_t> class_of;    // vertex -> class index
    std::size_t iota = 0;                 // number of classes
    std::size_t iota_k = 0;               // clique classes
    std::size_t iota_n = 0;               // independent classes
    std::size_t a = 0;                    // vertices in clique classes
    std::size_t b = 0;                    // vertices in independent classes
    VertexSet k_vertices;                 // union of clique classes
    VertexSet n_vertices;                 // union of independent classes

    bool twin_free() const noexcept { return a == 0 && b == 0; }
};

// N(u) \ {v} == N(v) \ {u}. Requires u != v.
bool are_twins(const Graph& g, Vertex u, Vertex v);

// Classes are the transitive closure of the twin relation. Throws
// InternalError if a class is neither a clique nor an independent set.
TwinPartition twin_partition(const Graph& g);

}  // namespace lexidim
