#include <doctest.h>

#include <hornred/catalog.hpp>
#include <hornred/errors.hpp>
#include <hornred/expr_io.hpp>

using namespace hornred;

TEST_CASE("catalog lists the thirty functions in order") {
    const std::vector<std::string> expected = {
        "G1",  "G2",  "G3",  "H1",  "H2",  "H3",  "H4",  "H5",  "H6",  "H7",
        "Phi1", "Phi2", "Phi3", "Psi1", "Psi2", "Theta1", "Theta2", "Gamma1", "Gamma2",
        "H1c", "H2c", "H3c", "H4c", "H5c", "H6c", "H7c", "H8c", "H9c", "H10c", "H11c"};
    CHECK(list_functions() == expected);
}

TEST_CASE("every definition is internally consistent") {
    for (const auto &def : catalog()) {
        CAPTURE(def.name);
        // Parameters and factors are in bijection.
        CHECK(def.factors.size() == def.params.size());
        for (const auto &p : def.params) {
            const PochhammerFactor *f = def.find_factor(p);
            REQUIRE(f != nullptr);
            CHECK((f->mu1 != 0 || f->mu2 != 0));
        }
        // The working variable set is the parameters followed by z1, z2.
        REQUIRE(def.ctx != nullptr);
        REQUIRE(def.ctx->size() == def.params.size() + 2);
        for (std::size_t i = 0; i < def.params.size(); ++i)
            CHECK(def.ctx->name(i) == def.params[i]);
        CHECK(def.ctx->name(def.params.size()) == "z1");
        CHECK(def.ctx->name(def.params.size() + 1) == "z2");
        // Rank and the extra relation go together.
        CHECK((def.holonomic_rank == 3) == def.extra.has_value());
    }
}

TEST_CASE("the rank-3 functions are exactly the twelve with an extra relation") {
    std::vector<std::string> rank3;
    for (const auto &def : catalog())
        if (def.holonomic_rank == 3)
            rank3.push_back(def.name);
    const std::vector<std::string> expected = {"G1",   "G2",   "G3",     "H3",
                                               "H6",   "Phi1", "Phi2",   "Phi3",
                                               "Gamma1", "Gamma2", "H6c", "H8c"};
    CHECK(rank3 == expected);
}

TEST_CASE("series factors match the definitions") {
    SUBCASE("G2") {
        const auto &def = get_definition("G2");
        REQUIRE(def.params == std::vector<std::string>{"a1", "a2", "b1", "b2"});
        const auto *a1 = def.find_factor("a1");
        const auto *b1 = def.find_factor("b1");
        const auto *b2 = def.find_factor("b2");
        CHECK(a1->role == FactorRole::Upper);
        CHECK(a1->mu1 == 1);
        CHECK(a1->mu2 == 0);
        CHECK(b1->mu1 == -1);
        CHECK(b1->mu2 == 1);
        CHECK(b2->mu1 == 1);
        CHECK(b2->mu2 == -1);
    }
    SUBCASE("H3 has a lower factor with both indices") {
        const auto &def = get_definition("H3");
        const auto *a = def.find_factor("a");
        const auto *c = def.find_factor("c");
        CHECK(a->role == FactorRole::Upper);
        CHECK(a->mu1 == 2);
        CHECK(a->mu2 == 1);
        CHECK(c->role == FactorRole::Lower);
        CHECK(c->mu1 == 1);
        CHECK(c->mu2 == 1);
    }
    SUBCASE("Phi2 carries its lower parameter") {
        const auto &def = get_definition("Phi2");
        CHECK(def.params == std::vector<std::string>{"b1", "b2", "c"});
        CHECK(def.find_factor("c")->role == FactorRole::Lower);
    }
}

TEST_CASE("extra relations parse to the expected coefficients") {
    const auto &g2 = get_definition("G2");
    REQUIRE(g2.extra.has_value());
    CHECK(g2.extra->ct12 == parse_expr("z1*z2-1", g2.ctx));
    CHECK(g2.extra->c1 == parse_expr("a1*a2*z1*z2", g2.ctx));
    CHECK(g2.extra->ct11.is_zero());
    CHECK(g2.extra->ct22.is_zero());

    const auto &gamma2 = get_definition("Gamma2");
    REQUIRE(gamma2.extra.has_value());
    CHECK(gamma2.extra->c1 == parse_expr("-z1*z2", gamma2.ctx));
    CHECK(gamma2.extra->ct12 == RationalExpr::constant(gamma2.ctx, 1));

    const auto &h3 = get_definition("H3");
    REQUIRE(h3.extra.has_value());
    CHECK(h3.extra->ct22 == parse_expr("-z1", h3.ctx));
    CHECK(h3.extra->ct12 == parse_expr("z2-2*z1", h3.ctx));
}

TEST_CASE("lookup is case-insensitive and rejects unknown names") {
    CHECK(get_definition("g2").name == "G2");
    CHECK(get_definition("PHI1").name == "Phi1");
    CHECK(get_definition("h10C").name == "H10c");
    try {
        get_definition("G9");
        FAIL("expected UnknownFunctionError");
    } catch (const UnknownFunctionError &e) {
        CHECK(e.valid_names.size() == 30);
    }
}

TEST_CASE("exceptional parameter detection") {
    const auto &g1 = get_definition("G1");
    // a = 2 is an integer; a+b1, a+b2 and b1+b2 are not.
    auto hits = exceptional_check(g1, {Rational(2), Rational(1, 3), Rational(1, 5)});
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == "a = 2");

    // Fully generic rational values trigger nothing.
    CHECK(exceptional_check(g1, {Rational(1, 3), Rational(1, 5), Rational(1, 7)}).empty());

    // b1+b2 integer while neither piece is.
    auto hits2 = exceptional_check(g1, {Rational(1, 2), Rational(1, 3), Rational(2, 3)});
    REQUIRE(hits2.size() == 1);
    CHECK(hits2[0] == "b1+b2 = 1");

    CHECK_THROWS_AS(exceptional_check(g1, {Rational(1)}), DomainError);
}

TEST_CASE("functions with no recorded exceptional set carry a note") {
    for (const char *name : {"H5c", "H10c"}) {
        const auto &def = get_definition(name);
        CHECK(def.exceptional.empty());
        CHECK(!def.notes.empty());
    }
    // The blank rows are the exception, not the rule.
    CHECK(!get_definition("G1").exceptional.empty());
    CHECK(!get_definition("H11c").exceptional.empty());
}

TEST_CASE("singular loci are polynomials in z1 and z2 alone") {
    const auto &g3 = get_definition("G3");
    REQUIRE(g3.singular_locus.size() == 1);
    CHECK(g3.singular_locus[0].total_degree() == 4);
    CHECK(to_string(g3.singular_locus[0]) == "27*z1^2*z2^2-18*z1*z2-4*z1-4*z2-1");

    CHECK(get_definition("Phi3").singular_locus.empty());
    CHECK(get_definition("G2").singular_locus.size() == 3);
}
