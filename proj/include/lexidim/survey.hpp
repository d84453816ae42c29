#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexidim/graph.hpp"
#include "lexidim/resolving.hpp"

namespace lexidim::survey {

// Identities checked over single graphs (first group) or (G, H) pairs.
enum class Check {
    complement_invariance,  // adjacency dimension of g equals that of its complement
    twin_identity,          // iota = n - a - b + iota_N + iota_K, classes clique/independent
    twin_equivalence,       // the twin relation is transitive
    metric_le_adjacency,    // beta <= beta_2 on connected graphs
    diameter_two,           // beta == beta_2 on connected graphs of diameter 2
    twin_swap,              // twin exchange preserves resolving sets
    universal_vertex,       // some metric basis avoids each universal vertex
    join_bounds,            // beta(g v K1) - 1 <= beta_2(g) <= beta(g v K1) and the equality test
    extremes,               // which graphs reach beta_2 = 1 and beta_2 = n - 1
    witness_minimality,     // solver witnesses resolve, nothing smaller does
    lex_formula,            // case formula equals brute-force beta(G[H])
    lex_witness,            // constructed witness resolves and has formula size
    row_projection,         // row projections of every product basis resolve H; beta(G[H]) >= n beta_2(H)
    lex_distance,           // product distances follow the closed distance rule
    complement_symmetry,    // H and its complement classify and evaluate consistently
    twin_free_collapse,     // twin-free G gives n beta_2(H)
};

std::string_view name(Check check);
// Accepts canonical names and the short aliases (e.g. "prop2.2", "thm3").
std::optional<Check> parse_check(std::string_view text);
bool is_pair_check(Check check);
std::vector<Check> graph_checks();
std::vector<Check> pair_checks();

enum class Status { pass, fail, skipped };

std::string_view to_string(Status status);

struct CheckOutcome {
    Check check;
    Status status = Status::skipped;
    std::string detail;
};

// Largest order for which twin_swap and witness_minimality walk every subset.
inline constexpr std::size_t kSubsetWalkOrder = 10;

std::vector<CheckOutcome> run_graph_checks(const Graph& g, std::span<const Check> checks,
                                           const SearchCaps& caps);
std::vector<CheckOutcome> run_pair_checks(const Graph& g, const Graph& h, std::span<const Check> checks,
                                          const SearchCaps& caps);

struct Item {
    std::string label;
    std::optional<Graph> g;  // absent when the input failed to parse
    std::optional<Graph> h;  // present for pair items
    std::string error;       // parse diagnostic
};

struct Row {
    std::size_t index = 0;
    std::string label;
    std::vector<CheckOutcome> outcomes;
    std::optional<std::string> error;
    bool cap_exceeded = false;

    bool violated() const;
};

struct Summary {
    std::size_t rows = 0;
    std::size_t violations = 0;  // rows with at least one failed check
    std::size_t errors = 0;      // rows that could not be evaluated
    std::size_t passed = 0;      // individual check results
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

// Evaluates items in parallel; rows come back in item order.
std::vector<Row> run(std::size_t count, const std::function<Item(std::size_t)>& item_at,
                     std::span<const Check> checks, const SearchCaps& caps, unsigned threads = 0);

Summary summarize(std::span<const Row> rows);

// Items for every labeled graph with min_order <= n <= max_order.
std::vector<Item> labeled_items(std::size_t min_order, std::size_t max_order);

// Items for every connected labeled G with 2 <= |G| <= g_max and every
// labeled H with 1 <= |H| <= h_max.
std::vector<Item> labeled_pair_items(std::size_t g_max, std::size_t h_max);

// True when g is isomorphic to P2, P3 or the complement of either. Only
// orders 2 and 3 can qualify, where the edge count decides.
bool is_small_path_or_complement(const Graph& g);

}  // namespace lexidim::survey
