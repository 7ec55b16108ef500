#include <doctest.h>

#include "gem/canonical.hpp"
#include "gem/enumerate.hpp"
#include "gem/io.hpp"
#include "gem/reduce.hpp"
#include "oracles.hpp"

using namespace gem;

namespace {

int error_line(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("graph file layout") {
    const std::string t1 = write_graph(make_T1());
    CHECK(t1 ==
          "gem 1 6\n"
          "edge 0 1 2\nedge 0 3 4\nedge 0 5 6\n"
          "edge 1 1 6\nedge 1 2 3\nedge 1 4 5\n"
          "edge 2 1 4\nedge 2 2 5\nedge 2 3 6\n");
    CHECK(parse_graph(t1) == make_T1());
    CHECK(write_graph(make_L()) == "gem 1 2\nedge 0 1 2\nedge 1 1 2\nedge 2 1 2\n");
}

TEST_CASE("comments, blank lines and edge order are free") {
    const std::string text =
        "# the sphere\n\ngem 1 2   # header\n"
        "edge 2 1 2\n"
        "\n"
        "edge 0 1 2 # first\n"
        "edge 1 1 2\n";
    CHECK(parse_graph(text) == make_L());
}

TEST_CASE("graph parse errors name the line") {
    CHECK(error_line("") == 1);
    CHECK(error_line("gem 2 2\n") == 1);
    CHECK(error_line("gem 1 3\n") == 1);
    CHECK(error_line("gem 1 2\nedge 0 1 1\nedge 1 1 2\nedge 2 1 2\n") == 2);
    CHECK(error_line("gem 1 2\nedge 0 1 2\nedge 3 1 2\nedge 2 1 2\n") == 3);
    CHECK(error_line("gem 1 2\nedge 0 1 2\nedge 1 1 2\nedge 2 1 5\n") == 4);
    CHECK(error_line("gem 1 2\nedge 0 1 2\nedge 0 1 2\nedge 2 1 2\n") == 3);
    CHECK(error_line("gem 1 2\nedge 0 2 1\n") == 2);
    CHECK(error_line("gem 1 2\nedge 0 1 2\nvertex 1\n") == 3);
    CHECK(error_line("gem 1 2\nedge 0 1 x\n") == 2);
    CHECK(error_line("gem 1 2\nedge 0 1 2\nedge 1 1 2\n") == 3);
    try {
        parse_graph(write_graph(make_T1()) + "edge 0 1 2\nedge 1 1 2\n");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.reason().find("expected 9 edge lines") != std::string::npos);
    }
}

TEST_CASE("trace records") {
    CHECK(format_move(CutSpec{2, Edge{0, 7, 8}, Edge{1, 5, 6}, 7}) == "cut c=2 ea=0:7-8 eb=1:5-6 arc=7");
    CHECK(format_move(GlueSpec{2, 2, 4}) == "glue c=2 w=2-4");
    CHECK(format_move(CutGlueSpec{CutSpec{2, Edge{0, 2, 3}, Edge{1, 5, 6}, 2}, GlueSpec{2, 2, 4}}) ==
          "cutglue c=2 ea=0:2-3 eb=1:5-6 arc=2 w=2-4");
    CHECK(format_move(InterchangeSpec{{Edge{0, 1, 2}, Edge{1, 4, 5}, Edge{2, 5, 6}}, 3, 4}) ==
          "interchange seam=0:1-2,1:4-5,2:5-6 u'=3 v'=4");
}

TEST_CASE("reduction certificates survive a write/read cycle") {
    for (int n = 2; n <= 12; n += 2) {
        for (const auto& e : enumerate_contracted(n).classes) {
            const Reduction r = reduce(e.graph);
            const std::string text = write_trace(r.certificate);
            const Certificate back = parse_trace(text);
            CHECK(back == r.certificate);
            CHECK(write_trace(back) == text);
            CHECK(verify_certificate(e.graph, back).conclusion == r.form);
        }
    }
}

TEST_CASE("trace parse errors") {
    const ColoredGraph g = enumerate_contracted(8).classes.back().graph;
    const std::string good = write_trace(reduce(g).certificate);
    CHECK_NOTHROW(parse_trace(good));
    CHECK_THROWS_AS(parse_trace(""), ParseError);
    CHECK_THROWS_AS(parse_trace("trace 2 x\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("trace 1 x\nflip c=2 -> y\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("trace 1 x\nglue c=2 w=1-2 y\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("trace 1 x\nglue c=5 w=1-2 -> y\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("trace 1 x\nconclude Q(2)\n"), ParseError);
    CHECK_THROWS_AS(parse_trace("trace 1 x\ncompose left=a right=b seam=0:1-2,1:1-2,2:1-2 -> c\n"), ParseError);
    try {
        parse_trace("trace 1 x\ncut c=2 ea=0:1-2 eb=1:2-3 arc=1 -> y\n\nglue c=2 w=1 -> z\n");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("conclude is optional on the top section") {
    const std::string text = "trace 1 6:216543.351624.465132\n";
    const Certificate c = parse_trace(text);
    CHECK_FALSE(c.conclusion.has_value());
    CHECK(write_trace(c) == text);
    CHECK(verify_certificate(make_T1(), c).final_graph == make_T1());
}

TEST_CASE("random graphs and traces round-trip byte-identically") {
    std::mt19937 rng(61);
    const auto catalog = enumerate_contracted(10).classes;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 12)(rng);
        const ColoredGraph g = oracle::random_graph(n, rng);
        const std::string text = write_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(write_graph(parse_graph(text)) == text);

        ColoredGraph cur = oracle::pick(catalog, rng).graph;
        const ColoredGraph start = cur;
        std::vector<Move> moves;
        for (int k = 0; k < 6; ++k) {
            if (const auto m = oracle::random_move(cur, rng)) {
                moves.push_back(*m);
                cur = apply_move(cur, *m);
            }
        }
        const MoveTrace t = record_trace(start, moves);
        const std::string trace_text = write_trace(t);
        const Certificate back = parse_trace(trace_text);
        CHECK(back == as_certificate(t));
        CHECK(write_trace(back) == trace_text);
        CHECK(verify_certificate(start, back).final_graph == cur);
    }
}
