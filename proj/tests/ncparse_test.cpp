#include "helpers.hpp"

#include "m11/ncparse.hpp"

#include <doctest.h>

using namespace m11;
using namespace testing_support;

TEST_CASE("grammar examples")
{
    NCExpr sq = parse("[t1,t2]^2");
    CHECK(sq == NCExpr::power(NCExpr::bracket({NCExpr::variable(1), NCExpr::variable(2)}), 2));
    NCExpr popov = parse("[[t1,t2]^2,t1]");
    CHECK(popov.kind == NCExpr::Kind::bracket);
    CHECK(popov.children[0] == sq);
    NCExpr nested = parse("[t1,t2,[t1,t3]]");
    REQUIRE(nested.children.size() == 3);
    CHECK(nested.children[2] == NCExpr::bracket({NCExpr::variable(1), NCExpr::variable(3)}));
    CHECK(parse("t1 t2") == parse("t1*t2"));
    CHECK(parse(" t1  *t2 ") == parse("t1 t2"));
    CHECK(parse("-t1") == NCExpr::product({NCExpr::scalar(-1), NCExpr::variable(1)}));
    CHECK(parse("-2 t1") == NCExpr::product({NCExpr::scalar(-2), NCExpr::variable(1)}));
    CHECK(parse("t1 - 1/2") == NCExpr::sum({NCExpr::variable(1), NCExpr::scalar(Rational(-1, 2))}));
    CHECK(parse("((t1))") == NCExpr::variable(1));
    CHECK(parse("t1^0") == NCExpr::power(NCExpr::variable(1), 0));
}

TEST_CASE("syntax errors carry positions")
{
    auto position_of = [](const char* text) -> long {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("t1 +") == 4);
    CHECK(position_of("t1 ) ") == 3);
    CHECK(position_of("[t1]") == 0);
    CHECK(position_of("t0") == 0);
    CHECK(position_of("t") == 1);
    CHECK(position_of("t1^") == 3);
    CHECK(position_of("[t1,t2") == 6);
    CHECK(position_of("(t1") == 3);
    CHECK(position_of("1/0") == 0);
    CHECK(position_of("t1 $") == 3);
    CHECK(position_of("") == 0);
    CHECK_THROWS_WITH_AS(parse("[t1]"), doctest::Contains("two arguments"), ParseError);
}

TEST_CASE("pretty printing normalizes whitespace")
{
    CHECK(pretty(parse("  [ t1 ,t2 ] ^ 2 ")) == "[t1, t2]^2");
    CHECK(pretty(parse("-t1+2*t2 t1-1/2")) == "-1 t1 + 2 t2 t1 - 1/2");
    CHECK(pretty(parse("(t1+t2)^2")) == "(t1 + t2)^2");
    CHECK(pretty(parse("t1 (t2 t1)")) == "t1 (t2 t1)");
}

TEST_CASE("parse inverts pretty on random trees")
{
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        NCExpr e = random_ast(rng, 3, 4);
        std::string text = pretty(e);
        CAPTURE(text);
        CHECK(parse(text) == e);
        CHECK(pretty(parse(text)) == text);
    }
}

TEST_CASE("evaluation")
{
    auto g = make_generic(2);
    CHECK(evaluate(parse("t1"), 2) == g[0]);
    CHECK(evaluate(parse("t1^0"), 2) == identity2());
    CHECK(evaluate(parse("3/2"), 2) == SuperMatrix::scalar(2, C(Rational(3, 2))));
    SuperMatrix c = commutator(g[0], g[1]);
    CHECK(evaluate(parse("[t1,t2]^2"), 2) == c * c);
    CHECK(evaluate(parse("[[t1,t2]^2,t1]"), 2).is_zero());
    CHECK(evaluate(parse("[t1,t2,t1]"), 2) == commutator(c, g[0]));
    CHECK_THROWS_AS(evaluate(parse("t3"), 2), std::out_of_range);
    CHECK(evaluate(parse("t3"), 3) == make_generic(3)[2]);
}

TEST_CASE("evaluation is a homomorphism")
{
    Rng rng(55);
    for (int i = 0; i < 30; ++i) {
        NCExpr a = random_nc_polynomial(rng, 2, 3, 3);
        NCExpr b = random_nc_polynomial(rng, 2, 3, 3);
        NCExpr c = random_nc_polynomial(rng, 2, 2, 2);
        SuperMatrix ea = evaluate(a, 2), eb = evaluate(b, 2), ec = evaluate(c, 2);
        CHECK(evaluate(NCExpr::product({a, b}), 2) == ea * eb);
        CHECK(evaluate(NCExpr::sum({a, b}), 2) == ea + eb);
        // bracket expansion: [a, b, c] = (ab - ba)c - c(ab - ba)
        NCExpr ab = NCExpr::sum({NCExpr::product({a, b}), NCExpr::product({NCExpr::scalar(-1), b, a})});
        NCExpr expanded = NCExpr::sum({NCExpr::product({ab, c}), NCExpr::product({NCExpr::scalar(-1), c, ab})});
        CHECK(evaluate(NCExpr::bracket({a, b, c}), 2) == evaluate(expanded, 2));
        CHECK(evaluate(NCExpr::power(a, 3), 2) == ea * ea * ea);
    }
}
