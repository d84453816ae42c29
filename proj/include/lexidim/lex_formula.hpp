#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lexidim/graph.hpp"
#include "lexidim/resolving.hpp"
#include "lexidim/twins.hpp"
#include "lexidim/vertex_set.hpp"

namespace lexidim {

// Which pathological vertices the adjacency bases of H force. "all-1" is a
// vertex adjacent to every basis vertex, "all-2" one adjacent to none.
enum class LexCase {
    free_bases,       // some basis has no all-1 vertex, some basis has no all-2 vertex
    both_forced,      // every basis has both
    all_one_forced,   // every basis has an all-1 vertex, some basis no all-2 vertex
    all_two_forced,   // every basis has an all-2 vertex, some basis no all-1 vertex
};

// Stable output tags: "Case32", "Case33", "Case34", "Case35".
std::string_view case_tag(LexCase c);

struct BasisProfile {
    VertexSet basis;
    bool has_all_one = false;
    std::optional<Vertex> all_one_witness;  // smallest such vertex
    bool has_all_two = false;
    std::optional<Vertex> all_two_witness;
};

struct HClassification {
    std::size_t beta2 = 0;
    std::vector<BasisProfile> profiles;  // one per adjacency basis, lexicographic
    LexCase lex_case = LexCase::free_bases;
    // free_bases: w1 is the first basis without an all-1 vertex and w2 the
    // first without an all-2 vertex. Other cases use a single certifying
    // basis stored in both.
    VertexSet chosen_w1;
    VertexSet chosen_w2;

    const BasisProfile& profile_of(const VertexSet& basis) const;
};

// How the reported value was obtained.
enum class LexRoute {
    case_formula,    // case dispatch on the classification of H
    trivial_factor,  // a factor has order 1, the product is the other factor
};

struct LexReport {
    std::size_t n = 0;  // order of G
    std::size_t m = 0;  // order of H
    LexRoute route = LexRoute::case_formula;
    std::optional<HClassification> classification;
    std::size_t formula_value = 0;
    VertexSet witness;  // flat indices in lex_product(G, H)
    bool witness_resolves = false;
    std::optional<std::size_t> oracle_value;
    std::optional<VertexSet> oracle_witness;
    bool oracle_capped = false;  // verification requested but refused by the cap
    TwinPartition twin_stats;    // of G

    bool verified() const { return oracle_value && *oracle_value == formula_value && witness_resolves; }
};

// Flat indices i*m .. i*m+m-1 of the copy of H over vertex i of G.
VertexSet row(const Graph& product, Vertex i, std::size_t m);

// {j : i*m + j in s}.
VertexSet project_onto_h(const VertexSet& s, Vertex i, std::size_t m);

BasisProfile profile_basis(const Graph& h, const VertexSet& basis);

// Enumerates every adjacency basis of h (cap: caps.enumeration_order).
HClassification classify_h(const Graph& h, const SearchCaps& caps = {});

// Value of the case formula for a connected G of order n >= 2.
std::size_t case_formula(LexCase c, std::size_t beta2, std::size_t n, const TwinPartition& g_twins);

// Explicit resolving set of lex_product(g, h) with exactly case_formula
// members. Class representatives are smallest members.
VertexSet construct_witness(const Graph& g, const Graph& h, const HClassification& cls);

// beta(G[H]). G must be connected. With verify, the brute-force dimension
// of the product is computed when its order fits caps.search_order.
LexReport lex_dimension(const Graph& g, const Graph& h, bool verify = false,
                        const SearchCaps& caps = {});

}  // namespace lexidim
