#include <doctest.h>

#include "lexidim/closed_form.hpp"
#include "lexidim/enumerate.hpp"
#include "lexidim/error.hpp"
#include "lexidim/io.hpp"
#include "lexidim/lex_formula.hpp"
#include "oracle.hpp"

using namespace lexidim;

namespace {

Graph g_(std::string_view dsl) { return parse_family(dsl); }

std::size_t brute_beta(const Graph& g) { return oracle::dimension(g, oracle::Kind::metric).value; }

}  // namespace

TEST_CASE("row and projection") {
    Graph p = lex_product(family::cycle(5), family::path(2));
    CHECK(row(p, 2, 2) == VertexSet{4, 5});
    CHECK(row(p, 0, 2) == VertexSet{0, 1});
    CHECK(project_onto_h(VertexSet{1, 4, 5, 9}, 2, 2) == VertexSet{0, 1});
    CHECK(project_onto_h(VertexSet{1, 4, 5, 9}, 4, 2) == VertexSet{1});
    CHECK(project_onto_h(VertexSet{1, 4, 5, 9}, 3, 2).empty());
}

TEST_CASE("basis profiles") {
    // P3 with basis {0}: 1 is adjacent to all of it, 2 to none.
    BasisProfile p = profile_basis(family::path(3), {0});
    CHECK(p.has_all_one);
    CHECK(p.all_one_witness == Vertex{1});
    CHECK(p.has_all_two);
    CHECK(p.all_two_witness == Vertex{2});

    BasisProfile k2 = profile_basis(family::complete(2), {0});
    CHECK(k2.has_all_one);
    CHECK_FALSE(k2.has_all_two);
}

TEST_CASE("classification of H") {
    CHECK(classify_h(family::path(3)).lex_case == LexCase::both_forced);
    CHECK(classify_h(family::complete(2)).lex_case == LexCase::all_one_forced);
    CHECK(classify_h(family::path(4)).lex_case == LexCase::free_bases);
    CHECK(classify_h(family::empty(2)).lex_case == LexCase::all_two_forced);
    CHECK(case_tag(LexCase::free_bases) == "Case32");
    CHECK(case_tag(LexCase::both_forced) == "Case33");
    CHECK(case_tag(LexCase::all_one_forced) == "Case34");
    CHECK(case_tag(LexCase::all_two_forced) == "Case35");

    HClassification p4 = classify_h(family::path(4));
    CHECK(p4.beta2 == 2);
    CHECK_FALSE(p4.profile_of(p4.chosen_w1).has_all_one);
    CHECK_FALSE(p4.profile_of(p4.chosen_w2).has_all_two);
    CHECK(std::is_sorted(p4.profiles.begin(), p4.profiles.end(),
                         [](const BasisProfile& a, const BasisProfile& b) { return a.basis < b.basis; }));

    // A graph and its complement swap the two forced cases.
    CHECK(classify_h(family::complete(3)).lex_case == LexCase::all_one_forced);
    CHECK(classify_h(family::empty(3)).lex_case == LexCase::all_two_forced);
}

TEST_CASE("case formulas") {
    TwinPartition t = twin_partition(family::complete(3));  // one K class of size 3
    CHECK(case_formula(LexCase::free_bases, 2, 3, t) == 6);
    CHECK(case_formula(LexCase::both_forced, 2, 3, t) == 3 * 3 - 1);
    CHECK(case_formula(LexCase::all_one_forced, 2, 3, t) == 6 + 3 - 1);
    CHECK(case_formula(LexCase::all_two_forced, 2, 3, t) == 6 + 0 - 0);
}

TEST_CASE("lex_dimension examples agree with brute force") {
    struct Example {
        const char* g;
        const char* h;
        std::size_t value;
    };
    const Example examples[] = {
        {"C5", "P2", 5},           {"P4", "P3", 4},          {"K2", "K(2,1)", 3},
        {"K3", "K(2,2)", 6},       {"join(E3,K1)", "E2", 6}, {"C5", "C6", 10},
        {"P4", "comp(P5)", 8},
    };
    for (const Example& e : examples) {
        CAPTURE(e.g);
        CAPTURE(e.h);
        Graph g = g_(e.g);
        Graph h = g_(e.h);
        SearchCaps caps;
        caps.search_order = 30;
        LexReport r = lex_dimension(g, h, true, caps);
        CHECK(r.route == LexRoute::case_formula);
        CHECK(r.formula_value == e.value);
        CHECK(r.witness_resolves);
        CHECK(r.witness.size() == e.value);
        REQUIRE(r.oracle_value);
        CHECK(*r.oracle_value == e.value);
        CHECK(r.verified());
    }
}

TEST_CASE("constructed witnesses") {
    Graph k2 = family::complete(2);
    Graph p3 = family::path(3);
    CHECK(construct_witness(k2, p3, classify_h(p3)) == VertexSet{0, 3, 4});

    Graph p4 = family::path(4);
    HClassification cls = classify_h(p4);
    VertexSet w = construct_witness(p4, p4, cls);
    CHECK(w.size() == 8);
    CHECK(is_resolving(lex_product(p4, p4), w, RepKind::metric));
}

TEST_CASE("verification beyond the cap is refused") {
    SearchCaps caps;
    caps.search_order = 8;
    LexReport r = lex_dimension(family::path(3), family::path(3), true, caps);
    CHECK(r.oracle_capped);
    CHECK_FALSE(r.oracle_value);
    // P3 has two twin classes: {0,2} and {1}.
    CHECK(r.formula_value == 3 * (1 + 1) - 2);
}

TEST_CASE("trivial factors and preconditions") {
    LexReport r = lex_dimension(family::path(5), family::complete(1));
    CHECK(r.route == LexRoute::trivial_factor);
    CHECK(r.formula_value == 1);
    CHECK(is_resolving(family::path(5), r.witness, RepKind::metric));

    LexReport s = lex_dimension(family::complete(1), family::complete(4));
    CHECK(s.route == LexRoute::trivial_factor);
    CHECK(s.formula_value == 3);

    CHECK_THROWS_AS(lex_dimension(family::complete(1), family::empty(3)), InputError);
    CHECK_THROWS_AS(lex_dimension(family::complete(1), family::complete(1)), InputError);
    CHECK_THROWS_AS(lex_dimension(family::empty(2), family::path(3)), InputError);
}

TEST_CASE("closed forms") {
    using namespace closed_form;
    CHECK(evaluate(PathCycleAdjacency{10}) == 4);
    CHECK(evaluate(Multipartite{{3, 2, 1, 1}}) == 4);
    CHECK(evaluate(Multipartite{{2, 2}}) == 2);
    CHECK(evaluate(Wheel{7}) == 3);
    CHECK(evaluate(Fan{5}) == 2);
    CHECK(evaluate(PathMetric{9}) == 1);
    CHECK(evaluate(CompleteMetric{6}) == 5);
    CHECK(evaluate(TwinFreeLexPathCycle{TwinFreeBase::cycle, 5, 6}) == 10);
    CHECK(evaluate(CompleteLexMultipartite{3, {2, 2}}) == 6);
    CHECK(evaluate(CompleteLexMultipartite{2, {2, 1}}) == 3);
    CHECK_THROWS_AS(evaluate(Wheel{6}), NotApplicable);
    CHECK_THROWS_AS(evaluate(Fan{3}), NotApplicable);
    CHECK_THROWS_AS(evaluate(PathCycleAdjacency{3}), NotApplicable);
    CHECK_THROWS_AS(evaluate(TwinFreeLexPathCycle{TwinFreeBase::cycle, 4, 6}), NotApplicable);
    CHECK_THROWS_AS(evaluate(Multipartite{{1}}), NotApplicable);

    for (std::size_t n = 4; n <= 10; ++n) {
        CHECK(evaluate(PathCycleAdjacency{n}) == dimension(family::path(n), RepKind::adjacency).value);
        CHECK(evaluate(PathCycleAdjacency{n}) == dimension(family::cycle(n), RepKind::adjacency).value);
    }
}

TEST_CASE("formula equals brute force over small pairs") {
    // Connected G of order 2..3 against every labeled H of order 1..3.
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::uint64_t gc = 0; gc < labeled_graph_count(n); ++gc) {
            Graph g = labeled_graph(n, gc);
            if (!g.connected()) continue;
            for (std::size_t m = 1; m <= 3; ++m) {
                for (std::uint64_t hc = 0; hc < labeled_graph_count(m); ++hc) {
                    Graph h = labeled_graph(m, hc);
                    if (n * m < 2) continue;
                    LexReport r = lex_dimension(g, h);
                    Graph p = lex_product(g, h);
                    REQUIRE(r.formula_value == brute_beta(p));
                    CHECK(r.witness.size() == r.formula_value);
                    CHECK(oracle::resolves(p, std::vector<std::size_t>(r.witness.begin(), r.witness.end()),
                                           oracle::Kind::metric));
                }
            }
        }
    }
}
