#include "lexidim/closed_form.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lexidim/error.hpp"

namespace lexidim::closed_form {

namespace {

std::size_t two_fifths(std::size_t n) { return (2 * n + 2) / 5; }

void require(bool ok, const std::string& what) {
    if (!ok) throw NotApplicable("formula not applicable: " + what);
}

std::size_t multipartite_value(const std::vector<std::size_t>& parts) {
    require(!parts.empty(), "multipartite graph needs at least one part");
    require(std::none_of(parts.begin(), parts.end(), [](std::size_t p) { return p == 0; }),
            "part sizes must be positive");
    const std::size_t m = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    require(m >= 2, "multipartite graph needs order >= 2");
    const std::size_t r = static_cast<std::size_t>(
        std::count_if(parts.begin(), parts.end(), [](std::size_t p) { return p >= 2; }));
    return r != parts.size() ? m - r - 1 : m - r;
}

struct Evaluator {
    std::size_t operator()(const PathCycleAdjacency& q) const {
        require(q.n >= 4, "adjacency dimension of paths and cycles needs n >= 4");
        return two_fifths(q.n);
    }
    std::size_t operator()(const Multipartite& q) const { return multipartite_value(q.parts); }
    std::size_t operator()(const Wheel& q) const {
        require(q.n >= 4 && q.n != 6, "wheel formula needs n >= 4, n != 6");
        return two_fifths(q.n);
    }
    std::size_t operator()(const Fan& q) const {
        require(q.n >= 4 && q.n != 6, "fan formula needs n >= 4, n != 6");
        return two_fifths(q.n);
    }
    std::size_t operator()(const PathMetric& q) const {
        require(q.n >= 2, "path metric dimension needs n >= 2");
        return 1;
    }
    std::size_t operator()(const CompleteMetric& q) const {
        require(q.n >= 2, "complete graph metric dimension needs n >= 2");
        return q.n - 1;
    }
    std::size_t operator()(const TwinFreeLexPathCycle& q) const {
        require(q.base == TwinFreeBase::path ? q.n >= 4 : q.n >= 5,
                "base graph must be P_n with n >= 4 or C_n with n >= 5");
        require(q.m >= 4, "fibre graph needs m >= 4");
        return q.n * two_fifths(q.m);
    }
    std::size_t operator()(const CompleteLexMultipartite& q) const {
        require(q.n >= 2, "complete base graph needs n >= 2");
        const std::size_t beta2 = multipartite_value(q.parts);
        const bool has_singleton = std::any_of(q.parts.begin(), q.parts.end(), [](std::size_t p) { return p == 1; });
        // n(m-r)-1 == n*beta2 + n - 1 when beta2 = m-r-1.
        return has_singleton ? q.n * (beta2 + 1) - 1 : q.n * beta2;
    }
};

}  // namespace

std::size_t evaluate(const Query& query) { return std::visit(Evaluator{}, query); }

}  // namespace lexidim::closed_form
