#include "lexidim/enumerate.hpp"

#include <vector>

#include "lexidim/error.hpp"

namespace lexidim {

std::uint64_t labeled_graph_count(std::size_t n) {
    if (n == 0 || n > 11) throw InputError("labeled enumeration supports orders 1..11");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t code) {
    if (code >= labeled_graph_count(n)) throw InputError("labeled graph code out of range");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++k) {
            if ((code >> k) & 1u) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

}  // namespace lexidim
