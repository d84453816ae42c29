#include <doctest.h>

#include <algorithm>
#include <random>

#include "lexidim/enumerate.hpp"
#include "lexidim/error.hpp"
#include "lexidim/resolving.hpp"
#include "oracle.hpp"

using namespace lexidim;

namespace {

std::vector<std::uint32_t> coords(std::initializer_list<std::uint32_t> values) { return values; }

oracle::Kind oracle_kind(RepKind kind) {
    return kind == RepKind::metric ? oracle::Kind::metric : oracle::Kind::adjacency;
}

VertexSet to_set(const oracle::Set& s) { return VertexSet(std::vector<Vertex>(s.begin(), s.end())); }

}  // namespace

TEST_CASE("metric representation") {
    // P4 = (1,2,3,4) -> indices 0..3.
    CHECK(metric_representation(family::path(4), 3, {0}).coords == coords({3}));

    Graph c6 = family::cycle(6);
    // C6 vertices 1..6 -> 0..5; v = 4, W = {1,3}.
    RepVector r = metric_representation(c6, 3, {0, 2});
    CHECK(r.kind == RepKind::metric);
    CHECK(r.coords == coords({3, 1}));

    RepVector own = metric_representation(c6, 2, {0, 2, 4});
    CHECK(std::count(own.coords.begin(), own.coords.end(), 0u) == 1);
    CHECK(own.coords[1] == 0);

    CHECK_THROWS_AS(metric_representation(c6, 0, {}), InputError);
    CHECK_THROWS_AS(metric_representation(c6, 6, {0}), InputError);
    CHECK_THROWS_AS(metric_representation(family::empty(3), 0, {1}), InputError);
}

TEST_CASE("adjacency representation") {
    Graph p3 = family::path(3);
    CHECK(adjacency_representation(p3, 1, {0}).coords == coords({1}));
    CHECK(adjacency_representation(p3, 2, {0}).coords == coords({2}));
    CHECK(adjacency_representation(p3, 0, {0}).coords == coords({0}));

    Graph c6 = family::cycle(6);
    CHECK(adjacency_representation(c6, 4, {0, 2}).coords == coords({2, 2}));
    CHECK(adjacency_representation(c6, 5, {0, 2}).coords == coords({1, 2}));
    // Disconnected graphs are fine for adjacency.
    CHECK(adjacency_representation(family::empty(3), 0, {1}).coords == coords({2}));
}

TEST_CASE("is_resolving") {
    Graph c6 = family::cycle(6);
    CHECK(is_resolving(c6, {0, 2}, RepKind::adjacency));
    CHECK_FALSE(is_resolving(c6, {0, 1}, RepKind::adjacency));
    for (std::size_t n = 2; n <= 9; ++n) CHECK(is_resolving(family::path(n), {0}, RepKind::metric));
    CHECK_FALSE(is_resolving(c6, {}, RepKind::adjacency));
    CHECK_THROWS_AS(is_resolving(family::empty(3), {0, 1}, RepKind::metric), InputError);
}

TEST_CASE("resolves_subset") {
    Graph c6 = family::cycle(6);
    CHECK(resolves_subset(c6, {0}, {}, RepKind::adjacency));
    CHECK(resolves_subset(c6, {0}, {3}, RepKind::adjacency));
    CHECK(resolves_subset(c6, {0, 2}, {0, 1, 2, 3, 4, 5}, RepKind::adjacency));
    CHECK_FALSE(resolves_subset(c6, {0, 1}, {3, 4}, RepKind::adjacency));
    CHECK(resolves_subset(c6, {0, 1}, {2, 4}, RepKind::adjacency));
}

TEST_CASE("dimension examples") {
    CHECK(dimension(family::complete(5), RepKind::metric).value == 4);
    CHECK(dimension(family::cycle(6), RepKind::adjacency).value == 2);
    CHECK(dimension(family::cycle(6), RepKind::metric).value == 2);
    CHECK(dimension(family::path(4), RepKind::adjacency).value == 2);

    DimensionResult p7 = dimension(family::path(7), RepKind::metric);
    CHECK(p7.value == 1);
    CHECK(p7.witness == VertexSet{0});
    CHECK_FALSE(p7.all_bases);
}

TEST_CASE("dimension preconditions and caps") {
    CHECK_THROWS_AS(dimension(family::complete(1), RepKind::adjacency), InputError);
    CHECK_THROWS_AS(dimension(family::empty(4), RepKind::metric), InputError);
    CHECK(dimension(family::empty(4), RepKind::adjacency).value == 3);

    CHECK_THROWS_AS(dimension(family::path(25), RepKind::metric), CapExceeded);
    SearchCaps wide;
    wide.search_order = 30;
    CHECK(dimension(family::path(25), RepKind::metric, false, wide).value == 1);

    CHECK_THROWS_AS(enumerate_adjacency_bases(family::path(13)), CapExceeded);
    SearchCaps narrow;
    narrow.search_order = 5;
    CHECK_THROWS_AS(dimension(family::path(6), RepKind::metric, false, narrow), CapExceeded);
}

TEST_CASE("lower_bound") {
    for (std::size_t n = 2; n <= 7; ++n) {
        CHECK(lower_bound(family::complete(n), RepKind::metric) == n - 1);
        CHECK(lower_bound(family::complete(n), RepKind::adjacency) == n - 1);
    }
    // 2^2 < 7 - 2 but 2^3 >= 7 - 3.
    CHECK(lower_bound(family::path(7), RepKind::adjacency) == 3);
    CHECK(dimension(family::path(7), RepKind::adjacency).value == 3);
    CHECK(lower_bound(family::path(6), RepKind::metric) == 1);
    CHECK(lower_bound(family::cycle(7), RepKind::metric) == 1);
}

TEST_CASE("enumerate_adjacency_bases") {
    CHECK(enumerate_adjacency_bases(family::path(3)) == std::vector<VertexSet>{{0}, {2}});
    CHECK(enumerate_adjacency_bases(family::complete(2)) == std::vector<VertexSet>{{0}, {1}});
    const auto c6 = enumerate_adjacency_bases(family::cycle(6));
    CHECK(std::find(c6.begin(), c6.end(), VertexSet{0, 2}) != c6.end());
    CHECK(std::is_sorted(c6.begin(), c6.end()));
}

TEST_CASE("solver matches brute force on every labeled graph of order 2..5") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::uint64_t code = 0; code < labeled_graph_count(n); ++code) {
            Graph g = labeled_graph(n, code);
            for (RepKind kind : {RepKind::metric, RepKind::adjacency}) {
                if (kind == RepKind::metric && !g.connected()) continue;
                const oracle::Result expected = oracle::dimension(g, oracle_kind(kind));
                const DimensionResult got = dimension(g, kind, true);
                REQUIRE(got.value == expected.value);
                CHECK(got.witness == to_set(expected.first));
                REQUIRE(got.all_bases->size() == expected.all.size());
                for (std::size_t i = 0; i < expected.all.size(); ++i) {
                    CHECK((*got.all_bases)[i] == to_set(expected.all[i]));
                }
                CHECK(lower_bound(g, kind) <= got.value);
            }
        }
    }
}

TEST_CASE("solver matches brute force on random graphs of order 6..9") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 6 + rng() % 4;
        std::bernoulli_distribution coin(0.2 + 0.6 * (trial % 5) / 4.0);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        for (RepKind kind : {RepKind::metric, RepKind::adjacency}) {
            if (kind == RepKind::metric && !g.connected()) continue;
            const oracle::Result expected = oracle::dimension(g, oracle_kind(kind));
            const DimensionResult got = dimension(g, kind);
            REQUIRE(got.value == expected.value);
            CHECK(got.witness == to_set(expected.first));
            CHECK(oracle::resolves(g, std::vector<std::size_t>(got.witness.begin(), got.witness.end()),
                                   oracle_kind(kind)));
        }
    }
}
