#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace lexidim::closed_form {

// Adjacency dimension of P_n or C_n, n >= 4: floor((2n+2)/5).
struct PathCycleAdjacency {
    std::size_t n;
};

// Both dimensions of K_{m1,...,mt} (adjacency for any t, metric for
// t >= 2): m-r-1 if some part is a singleton, m-r otherwise, where r
// counts parts of size >= 2. Total order at least 2.
struct Multipartite {
    std::vector<std::size_t> parts;
};

// Metric dimension of cycle(n) joined with K_1, n >= 4 and n != 6.
struct Wheel {
    std::size_t n;
};

// Metric dimension of path(n) joined with K_1, n >= 4 and n != 6.
struct Fan {
    std::size_t n;
};

// Metric dimension 1 of P_n, n >= 2.
struct PathMetric {
    std::size_t n;
};

// Metric dimension n-1 of K_n, n >= 2.
struct CompleteMetric {
    std::size_t n;
};

enum class TwinFreeBase { path, cycle };

// beta(G[H]) for G = P_n (n >= 4) or C_n (n >= 5), H one of P_m, C_m or
// their complements with m >= 4: n * floor((2m+2)/5).
struct TwinFreeLexPathCycle {
    TwinFreeBase base;
    std::size_t n;
    std::size_t m;
};

// beta(K_n[K_{m1,...,mt}]) for n >= 2: n(m-r)-1 with a singleton part,
// n(m-r) otherwise.
struct CompleteLexMultipartite {
    std::size_t n;
    std::vector<std::size_t> parts;
};

using Query = std::variant<PathCycleAdjacency, Multipartite, Wheel, Fan, PathMetric, CompleteMetric,
                           TwinFreeLexPathCycle, CompleteLexMultipartite>;

// Throws NotApplicable outside a formula's validity range.
std::size_t evaluate(const Query& query);

}  // namespace lexidim::closed_form
