#include "lexidim/twins.hpp"

#include <numeric>

#include "lexidim/error.hpp"

namespace lexidim {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Smaller root wins so each root is its class's smallest member.
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (y < x) std::swap(x, y);
        parent_[y] = x;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::string_view to_string(TwinType type) {
    switch (type) {
        case TwinType::single: return "1";
        case TwinType::clique: return "K";
        case TwinType::independent: return "N";
    }
    return "?";
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw InputError("are_twins requires distinct vertices");
    for (Vertex w = 0; w < g.order(); ++w) {
        if (w == u || w == v) continue;
        if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
    }
    return true;
}

TwinPartition twin_partition(const Graph& g) {
    const std::size_t n = g.order();
    DisjointSets sets(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (are_twins(g, u, v)) sets.unite(u, v);
        }
    }

    TwinPartition out;
    out.class_of.assign(n, 0);
    std::vector<std::size_t> index_of_root(n, n);
    std::vector<std::vector<Vertex>> members;
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t root = sets.find(v);
        if (index_of_root[root] == n) {
            index_of_root[root] = members.size();
            members.emplace_back();
        }
        out.class_of[v] = index_of_root[root];
        members[index_of_root[root]].push_back(v);
    }

    std::vector<Vertex> k_members, n_members;
    for (auto& cls : members) {
        TwinType type = TwinType::single;
        if (cls.size() >= 2) {
            std::size_t edges = 0;
            for (std::size_t i = 0; i < cls.size(); ++i) {
                for (std::size_t j = i + 1; j < cls.size(); ++j) edges += g.adjacent(cls[i], cls[j]) ? 1 : 0;
            }
            const std::size_t pairs = cls.size() * (cls.size() - 1) / 2;
            if (edges == pairs) {
                type = TwinType::clique;
                ++out.iota_k;
                out.a += cls.size();
                k_members.insert(k_members.end(), cls.begin(), cls.end());
            } else if (edges == 0) {
                type = TwinType::independent;
                ++out.iota_n;
                out.b += cls.size();
                n_members.insert(n_members.end(), cls.begin(), cls.end());
            } else {
                throw InternalError("twin class containing vertex " + std::to_string(cls.front()) +
                                    " is neither a clique nor an independent set");
            }
        }
        out.types.push_back(type);
        out.classes.emplace_back(std::move(cls));
    }
    out.iota = out.classes.size();
    out.k_vertices = VertexSet(std::move(k_members));
    out.n_vertices = VertexSet(std::move(n_members));
    return out;
}

}  // namespace lexidim
