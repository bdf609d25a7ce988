#include "doctest.h"

#include "conjugacy/expr.hpp"
#include "support/generators.hpp"

using namespace conjugacy::expr;
using conjugacy::testgen::Gen;
using conjugacy::words::Word;
using conjugacy::words::WordPair;

namespace {
WordPair P(const char* u, const char* v) { return WordPair{Word(u), Word(v)}; }
} // namespace

TEST_CASE("parse basic forms") {
    Expr e = parse("(ab,ba)*");
    CHECK(e.kind() == ExprKind::star);
    CHECK(e.child().kind() == ExprKind::literal);
    CHECK(e.child().pair() == P("ab", "ba"));

    e = parse("(a,a)(baa,aba)*(b,a)(aab,baa)*(a,b)");
    REQUIRE(e.kind() == ExprKind::concat);
    REQUIRE(e.children().size() == 5);
    CHECK(e.children()[0].pair() == P("a", "a"));
    CHECK(e.children()[1].kind() == ExprKind::star);
    CHECK(e.children()[1].child().pair() == P("baa", "aba"));
    CHECK(e.children()[3].kind() == ExprKind::star);
    CHECK(e.children()[4].pair() == P("a", "b"));

    e = parse("(,)");
    CHECK(e.kind() == ExprKind::literal);
    CHECK(e.pair() == P("", ""));
}

TEST_CASE("parse pair vs grouping disambiguation") {
    CHECK(parse("((a,b))") == Expr::literal(P("a", "b")));
    CHECK(parse("(ab,)") == Expr::literal(P("ab", "")));
    CHECK(parse("( a b , b a )") == Expr::literal(P("ab", "ba"))); // whitespace ignored
    CHECK(parse("0") == Expr::empty_set());
    CHECK(parse("0*").kind() == ExprKind::star);
    CHECK(parse("(ab,ba)**").child().kind() == ExprKind::star);
    CHECK_THROWS_AS(parse("(a)"), ParseError); // bare word cannot start a group
}

TEST_CASE("parse precedence") {
    // Concatenation binds tighter than sum; star tighter than both.
    Expr e = parse("(a,a)+(b,b)(c,c)*");
    REQUIRE(e.kind() == ExprKind::sum);
    REQUIRE(e.children().size() == 2);
    CHECK(e.children()[0].kind() == ExprKind::literal);
    const Expr& rhs = e.children()[1];
    REQUIRE(rhs.kind() == ExprKind::concat);
    CHECK(rhs.children()[1].kind() == ExprKind::star);

    // Nested sums flatten.
    e = parse("(a,a)+((b,b)+(c,c))");
    REQUIRE(e.kind() == ExprKind::sum);
    CHECK(e.children().size() == 3);
}

TEST_CASE("parse errors carry position and expectation") {
    try {
        parse("(ab,ba");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::syntax);
        CHECK(e.line == 1);
        CHECK(e.column == 7);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }

    try {
        parse("(ab,ba) ? (a,a)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::unknown_symbol);
        CHECK(e.column == 9);
    }

    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("+(a,a)"), ParseError);
    CHECK_THROWS_AS(parse("(a,b))"), ParseError);
    CHECK_THROWS_AS(parse("(A,b)"), ParseError);
}

TEST_CASE("render basic forms") {
    CHECK(render(Expr::star(Expr::literal(P("ab", "ba")))) == "(ab,ba)*");
    CHECK(render(Expr::literal(P("", ""))) == "(,)");
    CHECK(render(Expr::sum({Expr::literal(P("a", "a")), Expr::literal(P("b", "b"))})) ==
          "(a,a)+(b,b)");
    CHECK(render(Expr::empty_set()) == "0");
    // Sums are parenthesized inside concatenations and stars.
    Expr s = Expr::sum({Expr::literal(P("a", "a")), Expr::literal(P("b", "b"))});
    CHECK(render(Expr::concat({Expr::literal(P("x", "y")), s})) == "(x,y)((a,a)+(b,b))");
    CHECK(render(Expr::star(s)) == "((a,a)+(b,b))*");
}

TEST_CASE("parse and render round-trip") {
    Gen gen(0xE001);
    for (int it = 0; it < 300; ++it) {
        Expr e = gen.expression("abc", 3, 4, 4);
        std::string text = render(e);
        Expr back = parse(text);
        CHECK(back == e);
        // Rendered text is a fixed point of parse-then-render.
        CHECK(render(back) == text);
    }
}

TEST_CASE("node_count counts tree nodes") {
    CHECK(Expr::empty_set().node_count() == 1);
    CHECK(Expr::literal(P("a", "b")).node_count() == 1);
    CHECK(parse("(ab,ba)*").node_count() == 2);
    CHECK(parse("(a,a)(b,b)(c,c)").node_count() == 4);
    CHECK(parse("((a,a)+(b,b))*").node_count() == 4);
}
