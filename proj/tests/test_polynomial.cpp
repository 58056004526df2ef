#include <doctest.h>

#include <hornred/errors.hpp>
#include <hornred/expr_io.hpp>
#include <hornred/polynomial.hpp>

using namespace hornred;

namespace {

VarSetPtr xyz() { return VarSet::make({"x", "y", "z"}); }

Polynomial P(const VarSetPtr &vs, const char *text) {
    RationalExpr r = parse_expr(text, vs);
    REQUIRE(r.den().is_one());
    return r.num();
}

} // namespace

TEST_CASE("graded-lex term order") {
    auto vs = xyz();
    // x^2 > x*y > y^2 > x > y > 1 with x more significant than y.
    Polynomial p = P(vs, "1+y+x+y^2+x*y+x^2");
    std::vector<std::string> expected = {"x^2", "x*y", "y^2", "x", "y", "1"};
    std::size_t k = 0;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it, ++k) {
        Polynomial t(vs);
        t.add_term(it->first, it->second);
        CHECK(to_string(t) == expected[k]);
    }
    CHECK(k == expected.size());
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(2) == 0);
}

TEST_CASE("ring arithmetic identities") {
    auto vs = xyz();
    Polynomial a = P(vs, "3*x^2*y-2*y+7");
    Polynomial b = P(vs, "x*z-5*y^2+1");
    Polynomial c = P(vs, "2*z^3-x");

    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial::constant(vs, 1) == a);
    CHECK((a * Polynomial::constant(vs, 0)).is_zero());
    CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("binomial expansion") {
    auto vs = xyz();
    Polynomial p = P(vs, "x+y");
    CHECK(p.pow(4) == P(vs, "x^4+4*x^3*y+6*x^2*y^2+4*x*y^3+y^4"));
}

TEST_CASE("derivative and shift") {
    auto vs = xyz();
    Polynomial p = P(vs, "x^3*y-2*x*z+y^2");
    CHECK(p.derivative(0) == P(vs, "3*x^2*y-2*z"));
    CHECK(p.derivative(1) == P(vs, "x^3+2*y"));
    // Shift x -> x+2 then x -> x-2 must round-trip.
    CHECK(p.shift_var(0, Rational(2)).shift_var(0, Rational(-2)) == p);
    Polynomial q = P(vs, "x^2");
    CHECK(q.shift_var(0, Rational(1)) == P(vs, "x^2+2*x+1"));
}

TEST_CASE("evaluation") {
    auto vs = xyz();
    Polynomial p = P(vs, "x^2*y-3*z+1");
    // (2, 1/2, 1/3): 4*(1/2) - 1 + 1 = 2
    CHECK(p.eval({Rational(2), Rational(1, 2), Rational(1, 3)}) == Rational(2));
    CHECK_THROWS_AS(p.eval({Rational(1)}), DomainError);
}

TEST_CASE("exact division") {
    auto vs = xyz();
    Polynomial a = P(vs, "x^2-y^2");
    Polynomial b = P(vs, "x-y");
    CHECK(poly_div_exact(a, b) == P(vs, "x+y"));
    CHECK_THROWS_AS(poly_div_exact(P(vs, "x^2+y"), b), DomainError);
    // Division by a constant scales exactly.
    CHECK(poly_div_exact(P(vs, "3*x+6"), P(vs, "3")) == P(vs, "x+2"));
}

TEST_CASE("gcd basics") {
    auto vs = xyz();
    CHECK(poly_gcd(P(vs, "x^2-y^2"), P(vs, "x^2+2*x*y+y^2")) == P(vs, "x+y"));
    CHECK(poly_gcd(P(vs, "6*x"), P(vs, "4*x")) == P(vs, "2*x"));
    CHECK(poly_gcd(P(vs, "x*y"), P(vs, "z")).is_one());
    // Content-only gcd across disjoint variables.
    CHECK(poly_gcd(P(vs, "2*x+2"), P(vs, "4*y")) == P(vs, "2"));
    // Canonical associate: positive leading coefficient, primitive.
    CHECK(poly_gcd(P(vs, "-2*x^2-2*x"), P(vs, "-4*x")) == P(vs, "2*x"));
}

TEST_CASE("gcd of coprime dense univariates") {
    // Knuth's classic coprime pair: the naive PRS blows up, the subresultant
    // sequence must still conclude gcd = 1.
    auto vs = VarSet::make({"x"});
    Polynomial a = P(vs, "x^8+x^6-3*x^4-3*x^3+8*x^2+2*x-5");
    Polynomial b = P(vs, "3*x^6+5*x^4-4*x^2-9*x+21");
    CHECK(poly_gcd(a, b).is_one());
}

TEST_CASE("gcd recovers a shared multivariate factor") {
    auto vs = xyz();
    Polynomial g = P(vs, "x^2*y-z*y+3*x-1");
    Polynomial a = P(vs, "x+y+1") * g;
    Polynomial b = P(vs, "x-y+z^2") * g;
    CHECK(poly_gcd(a, b) == g);
    // Associates: scaling the inputs must not change the canonical gcd.
    Polynomial a2 = a;
    a2 *= Rational(-7, 3);
    CHECK(poly_gcd(a2, b) == g);
}

TEST_CASE("gcd with nested parameter factors") {
    // Shapes like the reduction denominators: products of linear forms in
    // parameters times polynomials in z.
    auto vs = VarSet::make({"a", "b", "z1", "z2"});
    Polynomial u = P(vs, "(a-1)*(b-1)*(z1+z2+1)");
    Polynomial v = P(vs, "(b-1)*(z1+z2+1)*(a+b)");
    CHECK(poly_gcd(u, v) == P(vs, "(b-1)*(z1+z2+1)"));
}
