#include "doctest.h"

#include <random>
#include <string>

#include "errors.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "support.hpp"

using ivfg::Graph;
using ivfg::ParseError;
using ivfg::parse_graph;
using ivfg::serialize_graph;
using ivfg::ValidationError;
using support::iv;

namespace {

const std::string kExampleDoc = "graph example26\n"
                                "vertex u1 0.3 0.7\n"
                                "vertex u2 0.3 0.8\n"
                                "vertex u3 0.4 0.5\n"
                                "edge u1 u2 0.2 0.3\n"
                                "edge u2 u3 0.3 0.4\n"
                                "edge u1 u3 0.2 0.3\n";

ParseError capture_parse_error(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError("unreachable", 0, 0);
}

ValidationError capture_validation_error(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ValidationError& e) {
        return e;
    }
    FAIL("expected a validation error");
    return ValidationError("unreachable");
}

} // namespace

TEST_CASE("parsing a document yields the same graph as building it") {
    const Graph parsed = parse_graph(kExampleDoc);
    CHECK(parsed == support::example26());
}

TEST_CASE("a bare header is a valid empty graph") {
    const Graph g = parse_graph("graph g\n");
    CHECK(g.name() == "g");
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(serialize_graph(g) == "graph g\n");
}

TEST_CASE("serialization is canonical regardless of input order") {
    const std::string scrambled = "graph example26\n"
                                  "vertex u3 0.4 0.5\n"
                                  "vertex u1 0.3 0.7\n"
                                  "vertex u2 0.3 0.8\n"
                                  "edge u3 u2 0.3 0.4\n"
                                  "edge u2 u1 0.2 0.3\n"
                                  "edge u3 u1 0.2 0.3\n";
    const std::string expected = "graph example26\n"
                                 "vertex u1 0.3 0.7\n"
                                 "vertex u2 0.3 0.8\n"
                                 "vertex u3 0.4 0.5\n"
                                 "edge u1 u2 0.2 0.3\n"
                                 "edge u1 u3 0.2 0.3\n"
                                 "edge u2 u3 0.3 0.4\n";
    CHECK(serialize_graph(parse_graph(scrambled)) == expected);
    CHECK(serialize_graph(parse_graph(kExampleDoc)) == expected);
}

TEST_CASE("serialize then parse is the identity on graphs") {
    const Graph original = support::example26();
    CHECK(parse_graph(serialize_graph(original)) == original);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        const std::uint64_t seed = rng();
        const Graph g = ivfg::random_graph(2 + seed % 7, ivfg::Rational(1 + seed % 5, 5), 10,
                                           seed);
        CAPTURE(seed);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
}

TEST_CASE("non-decimal rationals survive a round trip") {
    const Graph g = Graph::build("thirds",
                                 {{"a", iv("1/3", "2/3")}, {"b", iv("1/3", "2/3")}},
                                 {{"a", "b", iv("1/6", "1/3")}});
    const std::string doc = serialize_graph(g);
    CHECK(doc == "graph thirds\n"
                 "vertex a 1/3 2/3\n"
                 "vertex b 1/3 2/3\n"
                 "edge a b 1/6 1/3\n");
    CHECK(parse_graph(doc) == g);
}

TEST_CASE("comments, blank lines, and CRLF endings are tolerated") {
    const std::string doc = "# leading comment\r\n"
                            "graph g  # trailing comment\r\n"
                            "\r\n"
                            "vertex a 0.5 0.5#tight comment\r\n"
                            "   vertex b 0.5 0.5\r\n"
                            "edge a b 0.5 0.5\r\n";
    const Graph g = parse_graph(doc);
    CHECK(g.name() == "g");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse errors carry one-based line and column positions") {
    SUBCASE("empty document") {
        const ParseError e = capture_parse_error("");
        CHECK(std::string(e.what()) == "line 1, column 1: missing 'graph' header");
        CHECK(e.line == 1);
        CHECK(e.column == 1);
    }
    SUBCASE("comment-only document") {
        const ParseError e = capture_parse_error("# nothing here\n\n");
        CHECK(std::string(e.what()) == "line 1, column 1: missing 'graph' header");
    }
    SUBCASE("wrong first directive") {
        const ParseError e = capture_parse_error("vertex a 0.5 0.5\n");
        CHECK(std::string(e.what()) ==
              "line 1, column 1: expected 'graph <name>' as the first directive, got 'vertex'");
    }
    SUBCASE("header arity") {
        const ParseError e = capture_parse_error("graph\n");
        CHECK(std::string(e.what()) == "line 1, column 1: expected 'graph <name>'");
        CHECK(std::string(capture_parse_error("graph a b\n").what()) ==
              "line 1, column 1: expected 'graph <name>'");
    }
    SUBCASE("invalid graph name") {
        const ParseError e = capture_parse_error("graph bad!name\n");
        CHECK(std::string(e.what()) == "line 1, column 7: invalid graph name 'bad!name'");
        CHECK(e.column == 7);
    }
    SUBCASE("duplicate header") {
        const ParseError e = capture_parse_error("graph g\ngraph h\n");
        CHECK(std::string(e.what()) == "line 2, column 1: duplicate 'graph' header");
        CHECK(e.line == 2);
    }
    SUBCASE("vertex arity") {
        const ParseError e = capture_parse_error("graph g\nvertex a 0.5\n");
        CHECK(std::string(e.what()) == "line 2, column 1: expected 'vertex <id> <lo> <hi>'");
    }
    SUBCASE("edge arity") {
        const ParseError e = capture_parse_error("graph g\nedge a b 0.5\n");
        CHECK(std::string(e.what()) ==
              "line 2, column 1: expected 'edge <id1> <id2> <lo> <hi>'");
    }
    SUBCASE("invalid number points at the offending token") {
        const ParseError e = capture_parse_error("graph g\nvertex a 0.5 x.y\n");
        CHECK(std::string(e.what()) == "line 2, column 14: invalid number 'x.y'");
        CHECK(e.line == 2);
        CHECK(e.column == 14);
    }
    SUBCASE("unknown directive") {
        const ParseError e = capture_parse_error("graph g\nvertx a 0.5 0.6\n");
        CHECK(std::string(e.what()) == "line 2, column 1: unknown directive 'vertx'");
    }
    SUBCASE("indentation shifts the reported column") {
        const ParseError e = capture_parse_error("graph g\n  vertx a 0.5 0.6\n");
        CHECK(e.column == 3);
    }
}

TEST_CASE("domain violations in a document are collected, not thrown one by one") {
    SUBCASE("edges must follow their vertices") {
        const ValidationError e = capture_validation_error("graph g\n"
                                                           "vertex a 0.5 0.5\n"
                                                           "edge a b 0.4 0.4\n"
                                                           "vertex b 0.5 0.5\n");
        REQUIRE(e.violations.size() == 1);
        CHECK(e.violations[0] == "line 3: edge 'a'-'b': unknown vertex 'b'");
    }
    SUBCASE("interval violations are annotated with their line") {
        const ValidationError e = capture_validation_error("graph g\n"
                                                           "vertex a 0.7 0.3\n"
                                                           "vertex b 0.5 1.1\n");
        REQUIRE(e.violations.size() == 2);
        CHECK(e.violations[0] ==
              "line 2: vertex 'a': interval lower bound 0.7 exceeds upper bound 0.3");
        CHECK(e.violations[1] == "line 3: vertex 'b': interval upper bound 1.1 exceeds 1");
    }
    SUBCASE("bound violations surface through graph assembly") {
        const ValidationError e = capture_validation_error("graph g\n"
                                                           "vertex x 0.3 0.7\n"
                                                           "vertex y 0.4 0.6\n"
                                                           "edge x y 0.35 0.5\n");
        REQUIRE(e.violations.size() == 1);
        CHECK(e.violations[0] ==
              "edge 'x'-'y': lower bound 0.35 exceeds min of endpoint lower bounds 0.3");
    }
}
