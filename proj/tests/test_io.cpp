#include <doctest.h>

#include "lexidim/enumerate.hpp"
#include "lexidim/error.hpp"
#include "lexidim/io.hpp"

using namespace lexidim;

TEST_CASE("edge-list parsing") {
    CHECK(parse("4; 0-1,1-2,2-3", GraphFormat::edge_list) == family::path(4));
    CHECK(parse_edge_list("  4 ;0 - 1 ,\n1-2, 2 -3 ") == family::path(4));
    CHECK(parse_edge_list("3;") == family::empty(3));
    CHECK(emit_edge_list(family::path(3)) == "3; 0-1,1-2");
    CHECK(emit_edge_list(family::empty(2)) == "2;");
}

TEST_CASE("edge-list errors carry a position") {
    CHECK_THROWS_AS(parse_edge_list("4 0-1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0;"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3; 0-3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3; 1-1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3; 0-1 x"), ParseError);
    try {
        parse_edge_list("3; 0-1,1+2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("graph6 decoding") {
    // 'C' -> n = 4; '~' -> 111111, all six pairs present.
    CHECK(parse_graph6("C~") == family::complete(4));
    // Pairs 01,02,12,03,13,23 of P4 -> 101001 -> 41 + 63 = 'h'.
    CHECK(parse_graph6("Ch") == family::path(4));
    CHECK(emit_graph6(family::path(4)) == "Ch");
    // 01,02,12 of P3 -> 101 + 000 padding -> 40 + 63 = 'g'.
    CHECK(parse_graph6("Bg") == family::path(3));
    CHECK(parse_graph6(">>graph6<<Bg\n") == family::path(3));
    CHECK(parse_graph6("@") == family::complete(1));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6("Bh"), ParseError);   // padding bit set
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);  // extra byte
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // missing body
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);    // order 0
    CHECK_THROWS_AS(parse_graph6("C\x7f"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 long order field") {
    Graph big = family::cycle(70);
    const std::string text = emit_graph6(big);
    CHECK(text[0] == '~');
    CHECK(parse_graph6(text) == big);
}

TEST_CASE("parse inverts emit on every labeled graph up to order 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t code = 0; code < labeled_graph_count(n); ++code) {
            Graph g = labeled_graph(n, code);
            REQUIRE(parse_graph6(emit_graph6(g)) == g);
            REQUIRE(parse_edge_list(emit_edge_list(g)) == g);
        }
    }
}

TEST_CASE("family DSL") {
    CHECK(parse_family("P4") == family::path(4));
    CHECK(parse_family("C6") == family::cycle(6));
    CHECK(parse_family("K5") == family::complete(5));
    CHECK(parse_family("E3") == family::empty(3));
    const std::vector<std::size_t> parts{3, 2, 1, 1};
    CHECK(parse_family("K(3,2,1,1)") == family::complete_multipartite(parts));
    CHECK(parse_family("wheel(7)") == family::wheel(7));
    CHECK(parse_family("fan(5)") == family::fan(5));
    CHECK(parse_family("comp(P4)") == complement(family::path(4)));
    CHECK(parse_family("join(C6, K1)") == family::wheel(6));

    Graph product = parse(" lex( C5 , P2 ) ", GraphFormat::family);
    CHECK(product.order() == 10);
    CHECK(product == lex_product(family::cycle(5), family::path(2)));
    CHECK(parse_family("lex(comp(P3),join(E2,K1))").order() == 9);
}

TEST_CASE("family DSL errors") {
    CHECK_THROWS_AS(parse_family("C2"), ParseError);
    CHECK_THROWS_AS(parse_family("Q4"), ParseError);
    CHECK_THROWS_AS(parse_family("P0"), ParseError);
    CHECK_THROWS_AS(parse_family("lex(P2 P3)"), ParseError);
    CHECK_THROWS_AS(parse_family("K(2,0)"), ParseError);
    CHECK_THROWS_AS(parse_family("P4 extra"), ParseError);
    try {
        parse_family("join(P2,X)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}
