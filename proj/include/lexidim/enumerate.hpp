#pragma once

#include <cstddef>
#include <cstdint>

#include "lexidim/graph.hpp"

namespace lexidim {

// Number of labeled simple graphs on n vertices, 2^(n(n-1)/2). n <= 11.
std::uint64_t labeled_graph_count(std::size_t n);

// Bit k of code selects the k-th pair in the order (0,1),(0,2),...,(1,2),...
Graph labeled_graph(std::size_t n, std::uint64_t code);

}  // namespace lexidim
