#include <doctest.h>

#include <hornred/errors.hpp>
#include <hornred/expr_io.hpp>

using namespace hornred;

namespace {

VarSetPtr ctx() { return VarSet::make({"a", "b1", "b2", "z1", "z2"}); }

} // namespace

TEST_CASE("printer renders descending graded-lex, compact") {
    auto vs = ctx();
    CHECK(to_string(parse_expr("1+z1+b1*z1", vs)) == "b1*z1+z1+1");
    CHECK(to_string(parse_expr("-a", vs)) == "-a");
    CHECK(to_string(parse_expr("a/2", vs)) == "a/2");
    CHECK(to_string(parse_expr("(a+1)/(2*b1)", vs)) == "(a+1)/(2*b1)");
    CHECK(to_string(parse_expr("-z1/(z2*(1+a))", vs)) == "-z1/(a*z2+z2)");
    CHECK(to_string(parse_expr("3/4", vs)) == "3/4");
    CHECK(to_string(parse_expr("a^2*b1^3", vs)) == "a^2*b1^3");
}

TEST_CASE("round trip parse(print(r)) == r") {
    auto vs = ctx();
    const char *samples[] = {
        "(b1*z1+b1+b2*z1-z1-1)/((b1-1)*(z1+z2+1))",
        "-(a-z1*(b1+b2-1)-1)/((a-1)*(b1-1)*(z1+z2+1))",
        "1-4*z1*z2",
        "a*b1*b2/7-z1^3/(a+b1)^2",
        "0",
        "-1/2",
        "z1^2/(4*z2)",
    };
    for (const char *s : samples) {
        RationalExpr r = parse_expr(s, vs);
        CHECK(parse_expr(to_string(r), vs) == r);
    }
}

TEST_CASE("whitespace and sign handling") {
    auto vs = ctx();
    CHECK(parse_expr("  a +\tb1\n* 2 ", vs) == parse_expr("a+2*b1", vs));
    CHECK(parse_expr("--a", vs) == parse_expr("a", vs));
    CHECK(parse_expr("-a^2", vs) == -parse_expr("a^2", vs));
    CHECK(parse_expr("a-+-b1", vs) == parse_expr("a+b1", vs));
    CHECK(parse_expr("a^(-1)", vs) == parse_expr("1/a", vs));
    CHECK(parse_expr("2^-2", vs) == parse_expr("1/4", vs));
}

TEST_CASE("operator precedence") {
    auto vs = ctx();
    CHECK(parse_expr("a+b1*z1^2", vs) == parse_expr("a+(b1*(z1^2))", vs));
    CHECK(parse_expr("a/b1/z1", vs) == parse_expr("a/(b1*z1)", vs));
    CHECK(parse_expr("a-b1-b2", vs) == parse_expr("a-(b1+b2)", vs));
    CHECK(parse_expr("3*a/(2*b1)", vs) == parse_expr("(3/2)*(a/b1)", vs));
}

TEST_CASE("parse errors") {
    auto vs = ctx();
    CHECK_THROWS_AS(parse_expr("a+q", vs), ParseError);      // unknown symbol
    CHECK_THROWS_AS(parse_expr("a+", vs), ParseError);       // dangling operator
    CHECK_THROWS_AS(parse_expr("(a+1", vs), ParseError);     // missing paren
    CHECK_THROWS_AS(parse_expr("a 1", vs), ParseError);      // juxtaposition
    CHECK_THROWS_AS(parse_expr("a^b1", vs), ParseError);     // non-integer power
    CHECK_THROWS_AS(parse_expr("a$", vs), ParseError);       // stray character
    CHECK_THROWS_AS(parse_expr("1/0", vs), EvaluationError); // literal zero division
}
