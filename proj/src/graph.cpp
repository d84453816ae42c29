#include "lexidim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lexidim/error.hpp"

namespace lexidim {

namespace {

DistanceMatrix bfs_all_pairs(const std::vector<std::vector<Vertex>>& adjacency) {
    const std::size_t n = adjacency.size();
    std::vector<std::uint32_t> entries(n * n, DistanceMatrix::kInfinite);
    std::vector<Vertex> queue(n);
    for (Vertex source = 0; source < n; ++source) {
        std::uint32_t* row = entries.data() + source * n;
        row[source] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = source;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : adjacency[u]) {
                if (row[w] == DistanceMatrix::kInfinite) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(entries));
}

}  // namespace

std::uint32_t DistanceMatrix::max_finite() const {
    std::uint32_t best = 0;
    for (std::uint32_t d : entries_) {
        if (d != kInfinite) best = std::max(best, d);
    }
    return best;
}

Graph::Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(order), matrix_(order * order, 0), labels_(std::move(labels)) {
    if (order == 0) throw InputError("graph order must be at least 1");
    if (!labels_.empty() && labels_.size() != order) {
        throw InputError("label count does not match graph order");
    }
    for (const auto& [u, v] : edges) {
        if (u >= order || v >= order) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(order) + ")");
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (matrix_[u * order + v] != 0) continue;
        matrix_[u * order + v] = 1;
        matrix_[v * order + u] = 1;
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        ++edge_count_;
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());

    auto dist = std::make_shared<DistanceMatrix>(bfs_all_pairs(adjacency_));
    const auto first_row = dist->row(0);
    connected_ = std::none_of(first_row.begin(), first_row.end(),
                              [](std::uint32_t d) { return d == DistanceMatrix::kInfinite; });
    distances_ = std::move(dist);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph build_graph(std::size_t order, std::span<const Edge> edges) {
    return Graph(order, edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(g.order(), edges, g.labels());
}

Graph join(const Graph& g, const Graph& h) {
    const std::size_t n = g.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + n, v + n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, v + n);
    }
    return Graph(n + h.order(), edges);
}

Graph lex_product(const Graph& g, const Graph& h) {
    const std::size_t n = g.order();
    const std::size_t m = h.order();
    std::vector<Edge> edges;
    edges.reserve(n * h.edge_count() + g.edge_count() * m * m);
    for (Vertex i = 0; i < n; ++i) {
        for (const auto& [j, s] : h.edges()) edges.emplace_back(i * m + j, i * m + s);
    }
    for (const auto& [i, r] : g.edges()) {
        for (Vertex j = 0; j < m; ++j) {
            for (Vertex s = 0; s < m; ++s) edges.emplace_back(i * m + j, r * m + s);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(n * m);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < m; ++j) {
            labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
        }
    }
    return Graph(n * m, edges, std::move(labels));
}

DistanceMatrix distances(const Graph& g) { return g.distances(); }

bool is_connected(const Graph& g) { return g.connected(); }

namespace family {

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle requires at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph empty(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

Graph complete_multipartite(std::span<const std::size_t> parts) {
    if (parts.empty()) throw InputError("complete multipartite graph needs at least one part");
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] == 0) throw InputError("complete multipartite part sizes must be positive");
        part_of.insert(part_of.end(), parts[p], p);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u) {
        for (Vertex v = u + 1; v < part_of.size(); ++v) {
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
        }
    }
    return Graph(part_of.size(), edges);
}

Graph wheel(std::size_t n) { return join(cycle(n), complete(1)); }

Graph fan(std::size_t n) { return join(path(n), complete(1)); }

}  // namespace family

}  // namespace lexidim
