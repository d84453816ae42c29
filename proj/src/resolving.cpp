#include "lexidim/resolving.hpp"

#include <algorithm>
#include <bit>

#include "lexidim/error.hpp"
#include "lexidim/twins.hpp"

namespace lexidim {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

void check_set(const Graph& g, const VertexSet& w) {
    if (!w.empty() && w.members().back() >= g.order()) {
        throw InputError("vertex " + std::to_string(w.members().back()) + " out of range");
    }
}

void require_connected(const Graph& g) {
    if (!g.connected()) {
        throw InputError("metric resolving requires a connected graph (distances undefined across components)");
    }
}

std::uint32_t code(const Graph& g, Vertex v, Vertex w, RepKind kind) {
    return kind == RepKind::metric ? g.distance(v, w) : adjacency_code(g, v, w);
}

bool distinct_representations(const Graph& g, const VertexSet& w, std::span<const Vertex> vertices,
                              RepKind kind) {
    std::vector<std::vector<std::uint32_t>> reps;
    reps.reserve(vertices.size());
    for (Vertex v : vertices) reps.push_back(representation(g, v, w, kind).coords);
    std::sort(reps.begin(), reps.end());
    return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

// Subset search over word-encoded vertex sets. A set W resolves g iff it
// intersects, for every pair u < v, the set of vertices w with
// code(u,w) != code(v,w).
class BasisSearch {
public:
    BasisSearch(const Graph& g, RepKind kind) : n_(g.order()) {
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = u + 1; v < n_; ++v) {
                std::uint64_t mask = 0;
                for (Vertex w = 0; w < n_; ++w) {
                    if (code(g, u, w, kind) != code(g, v, w, kind)) mask |= bit(w);
                }
                pair_masks_.push_back(mask);
            }
        }
        prune_masks();

        const TwinPartition twins = twin_partition(g);
        class_id_.assign(n_, kNoClass);
        for (const VertexSet& cls : twins.classes) {
            if (cls.size() < 2) continue;
            for (Vertex v : cls) class_id_[v] = class_masks_.size();
            class_masks_.push_back(cls.to_mask());
        }
    }

    // All (or the first, in lexicographic order) resolving sets of size k.
    std::vector<std::uint64_t> search(std::size_t k, bool all) {
        found_.clear();
        all_ = all;
        if (k <= n_) descend(0, k, 0, 0);
        return found_;
    }

private:
    static constexpr std::size_t kNoClass = static_cast<std::size_t>(-1);

    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

    // Supersets of another mask never decide anything; smaller masks first
    // so failing sets are rejected early.
    void prune_masks() {
        std::sort(pair_masks_.begin(), pair_masks_.end(), [](std::uint64_t a, std::uint64_t b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        pair_masks_.erase(std::unique(pair_masks_.begin(), pair_masks_.end()), pair_masks_.end());
        std::vector<std::uint64_t> kept;
        for (std::uint64_t m : pair_masks_) {
            const bool dominated = std::any_of(kept.begin(), kept.end(),
                                               [m](std::uint64_t k) { return (k & m) == k; });
            if (!dominated) kept.push_back(m);
        }
        pair_masks_ = std::move(kept);
    }

    bool hits_all(std::uint64_t w) const {
        for (std::uint64_t m : pair_masks_) {
            if ((m & w) == 0) return false;
        }
        return true;
    }

    bool twin_constraint_holds(std::uint64_t chosen) const {
        for (std::uint64_t cls : class_masks_) {
            if (std::popcount(cls & ~chosen) > 1) return false;
        }
        return true;
    }

    std::uint64_t suffix(std::size_t start) const {
        return start >= 64 ? 0 : (n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1) & ~(bit(start) - 1);
    }

    // Picks vertices in increasing order so sets are visited
    // lexicographically. `skipped` flags twin classes that already lost a
    // member; a class may lose at most one.
    bool descend(std::size_t start, std::size_t remaining, std::uint64_t chosen, std::uint64_t skipped) {
        if (remaining == 0) {
            if (twin_constraint_holds(chosen) && hits_all(chosen)) {
                found_.push_back(chosen);
                return !all_;
            }
            return false;
        }
        if (!hits_all(chosen | suffix(start))) return false;
        for (std::size_t i = start; i + remaining <= n_; ++i) {
            if (descend(i + 1, remaining - 1, chosen | bit(i), skipped)) return true;
            const std::size_t c = class_id_[i];
            if (c != kNoClass) {
                if (skipped & bit(c)) return false;
                skipped |= bit(c);
            }
        }
        return false;
    }

    std::size_t n_;
    std::vector<std::uint64_t> pair_masks_;
    std::vector<std::uint64_t> class_masks_;
    std::vector<std::size_t> class_id_;
    std::vector<std::uint64_t> found_;
    bool all_ = false;
};

}  // namespace

std::string_view to_string(RepKind kind) {
    return kind == RepKind::metric ? "metric" : "adjacency";
}

std::uint32_t adjacency_code(const Graph& g, Vertex v, Vertex w) {
    if (v == w) return 0;
    return g.adjacent(v, w) ? 1 : 2;
}

RepVector metric_representation(const Graph& g, Vertex v, const VertexSet& w) {
    return representation(g, v, w, RepKind::metric);
}

RepVector adjacency_representation(const Graph& g, Vertex v, const VertexSet& w) {
    return representation(g, v, w, RepKind::adjacency);
}

RepVector representation(const Graph& g, Vertex v, const VertexSet& w, RepKind kind) {
    if (w.empty()) throw InputError("representation requires a nonempty landmark set");
    check_vertex(g, v);
    check_set(g, w);
    if (kind == RepKind::metric) require_connected(g);
    RepVector out{kind, {}};
    out.coords.reserve(w.size());
    for (Vertex landmark : w) out.coords.push_back(code(g, v, landmark, kind));
    return out;
}

bool is_resolving(const Graph& g, const VertexSet& w, RepKind kind) {
    if (kind == RepKind::metric) require_connected(g);
    check_set(g, w);
    if (w.empty()) return false;
    // Landmarks are the only vertices with a 0 coordinate, so only the
    // remaining vertices need comparing.
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!w.contains(v)) rest.push_back(v);
    }
    return distinct_representations(g, w, rest, kind);
}

bool resolves_subset(const Graph& g, const VertexSet& w, const VertexSet& t, RepKind kind) {
    if (kind == RepKind::metric) require_connected(g);
    check_set(g, w);
    check_set(g, t);
    if (t.size() <= 1) return true;
    if (w.empty()) return false;
    return distinct_representations(g, w, t.members(), kind);
}

std::size_t lower_bound(const Graph& g, RepKind kind) {
    const std::size_t n = g.order();
    std::size_t bound = n - twin_partition(g).iota;
    if (kind == RepKind::adjacency) {
        std::size_t k = 0;
        // Non-landmarks carry coordinates in {1,2}: at most 2^k of them.
        while (k < 64 && (std::uint64_t{1} << k) < n - std::min(k, n)) ++k;
        bound = std::max(bound, k);
    }
    return std::max<std::size_t>(bound, 1);
}

DimensionResult dimension(const Graph& g, RepKind kind, bool enumerate_all, const SearchCaps& caps) {
    if (g.order() < 2) throw InputError("dimension requires a graph of order at least 2");
    if (kind == RepKind::metric) require_connected(g);
    const std::size_t cap = std::min(enumerate_all ? caps.enumeration_order : caps.search_order, kMaxCap);
    if (g.order() > cap) {
        throw CapExceeded("oracle cap exceeded: order " + std::to_string(g.order()) + " > cap " +
                          std::to_string(cap));
    }

    BasisSearch search(g, kind);
    for (std::size_t k = lower_bound(g, kind); k < g.order(); ++k) {
        std::vector<std::uint64_t> found = search.search(k, enumerate_all);
        if (found.empty()) continue;
        DimensionResult out;
        out.value = k;
        out.witness = VertexSet::from_mask(found.front());
        if (enumerate_all) {
            std::vector<VertexSet> bases;
            bases.reserve(found.size());
            for (std::uint64_t mask : found) bases.push_back(VertexSet::from_mask(mask));
            out.all_bases = std::move(bases);
        }
        return out;
    }
    throw InternalError("no resolving set of size below the order was found");
}

std::vector<VertexSet> enumerate_bases(const Graph& g, RepKind kind, const SearchCaps& caps) {
    return *dimension(g, kind, true, caps).all_bases;
}

std::vector<VertexSet> enumerate_adjacency_bases(const Graph& g, const SearchCaps& caps) {
    return enumerate_bases(g, RepKind::adjacency, caps);
}

}  // namespace lexidim
