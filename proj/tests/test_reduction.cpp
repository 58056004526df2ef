#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include <json.hpp>

#include "hornred/annihilator.hpp"
#include "hornred/catalog.hpp"
#include "hornred/errors.hpp"
#include "hornred/expr_io.hpp"
#include "hornred/reduction.hpp"

using namespace hornred;

namespace {

std::map<std::string, int> shift_map(const HornDefinition &def, const ShiftVector &shift) {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < shift.size(); ++i)
        if (shift[i] != 0)
            out.emplace(def.params[i], shift[i]);
    return out;
}

// Reduce along sA first and then along sB starting from the shifted point;
// the composite relates the original function to the one at sA + sB.
ThetaOperator chained(const HornDefinition &def, const ShiftVector &sA, const ShiftVector &sB) {
    ShiftVector total = sA;
    for (std::size_t i = 0; i < total.size(); ++i)
        total[i] += sB[i];
    ThetaOperator head = reduce(def, sA).as_operator();
    ThetaOperator tail = reduce(def, sB).as_operator().shifted(shift_map(def, sA));
    RewriteRules rules = derive_rules(def).shifted(shift_map(def, total));
    return compose(head, tail, rules);
}

} // namespace

TEST_CASE("plan_path expands a shift vector into unit steps in declaration order") {
    const HornDefinition &g1 = get_definition("G1");

    auto steps = plan_path(g1, {-1, -1, 0});
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].param == "a");
    CHECK(steps[0].direction == -1);
    CHECK(steps[1].param == "b1");
    CHECK(steps[1].direction == -1);

    steps = plan_path(g1, {2, 0, -1});
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].param == "a");
    CHECK(steps[0].direction == 1);
    CHECK(steps[1].param == "a");
    CHECK(steps[1].direction == 1);
    CHECK(steps[2].param == "b2");
    CHECK(steps[2].direction == -1);

    CHECK(plan_path(g1, {0, 0, 0}).empty());
    CHECK_THROWS_AS(plan_path(g1, {1, 0}), DomainError);
}

TEST_CASE("a zero shift reduces to the identity") {
    for (const HornDefinition &def : catalog()) {
        CAPTURE(def.name);
        ShiftVector zero(def.params.size(), 0);
        ReductionResult r = reduce(def, zero);
        CHECK(r.as_operator().is_identity());
        REQUIRE(r.new_params.size() == def.params.size());
        for (std::size_t i = 0; i < def.params.size(); ++i)
            CHECK(r.new_params[i] == RationalExpr::variable(def.ctx, def.params[i]));
    }
}

TEST_CASE("lowering a and b1 of G1 yields the known closed form") {
    const HornDefinition &def = get_definition("G1");
    ReductionResult r = reduce(def, {-1, -1, 0});

    CHECK(r.q0 == parse_expr("(b1*(z1+1)+(b2-1)*z1-1)/((b1-1)*(z1+z2+1))", def.ctx));
    CHECK(r.q1 == parse_expr("(-a+z1*(b1+b2-1)+1)/((a-1)*(b1-1)*(z1+z2+1))", def.ctx));
    CHECK(r.q2 ==
          parse_expr("(a+b1*z1+b1+b2*z1+b2-z1-2)/((a-1)*(b1-1)*(z1+z2+1))", def.ctx));
    CHECK(r.q12.is_zero());

    REQUIRE(r.new_params.size() == 3);
    CHECK(to_string(r.new_params[0]) == "a-1");
    CHECK(to_string(r.new_params[1]) == "b1-1");
    CHECK(to_string(r.new_params[2]) == "b2");
}

TEST_CASE("shifting H1 by (-1,0,0,1) yields the known closed form") {
    const HornDefinition &def = get_definition("H1");
    ReductionResult r = reduce(def, {-1, 0, 0, 1});

    const std::string den = "((a-1)*d*(z1-1)*(z2+1))";
    CHECK(r.q0 == parse_expr("((a-1)*d*(z1-1)*(z2+1)-b*z1*(a*z2+a+c*z2-z2-1))/" + den,
                             def.ctx));
    CHECK(r.q1 == parse_expr("(-a*(z2+1)-b*z1*(z2+1)-c*z1*z2+d*z1*z2+d*z1+z2+1)/" + den,
                             def.ctx));
    CHECK(r.q2 == parse_expr("(z1*(b-z2*(a+c-1))-d*(z1-1)*(z2+1))/" + den, def.ctx));
    CHECK(r.q12 == parse_expr("(-2*z1*z2+z2+1)/" + den, def.ctx));

    REQUIRE(r.new_params.size() == 4);
    CHECK(to_string(r.new_params[0]) == "a-1");
    CHECK(to_string(r.new_params[1]) == "b");
    CHECK(to_string(r.new_params[2]) == "c");
    CHECK(to_string(r.new_params[3]) == "d+1");
}

TEST_CASE("raising b and c of H1c yields the known closed form") {
    const HornDefinition &def = get_definition("H1c");
    ReductionResult r = reduce(def, {0, 1, 1});

    CHECK(r.q0 ==
          parse_expr("(-a^2*z1-a*b*z1+a*c+b*c+2*b*z1*z2-c*z2+2*z1*z2)/(a*c+b*c)", def.ctx));
    CHECK(r.q1 == parse_expr("(-a*z1+a-b*z1+b+2*z1*z2-z2)/(a*c+b*c)", def.ctx));
    CHECK(r.q2 == parse_expr("(z1*(a+b+2*z2)-c)/(c*(a+b))", def.ctx));
    CHECK(r.q12 == parse_expr("-1/(a*c+b*c)", def.ctx));

    REQUIRE(r.new_params.size() == 3);
    CHECK(to_string(r.new_params[0]) == "a");
    CHECK(to_string(r.new_params[1]) == "b+1");
    CHECK(to_string(r.new_params[2]) == "c+1");
}

TEST_CASE("raising and then lowering any parameter returns to the identity") {
    for (const HornDefinition &def : catalog()) {
        RewriteRules rules = derive_rules(def);
        for (std::size_t i = 0; i < def.params.size(); ++i) {
            CAPTURE(def.name);
            CAPTURE(def.params[i]);
            ShiftVector up(def.params.size(), 0);
            up[i] = 1;
            ShiftVector down(def.params.size(), 0);
            down[i] = -1;
            ThetaOperator raise = reduce(def, up).as_operator();
            ThetaOperator lower =
                reduce(def, down).as_operator().shifted({{def.params[i], 1}});
            CHECK(compose(raise, lower, rules).is_identity());
        }
    }
}

TEST_CASE("mixed shifts are independent of the order of the partial reductions") {
    struct Case {
        const char *function;
        ShiftVector first;
        ShiftVector second;
    };
    const std::vector<Case> cases = {
        {"G1", {1, 0, 0}, {0, -1, 0}},
        {"H1", {0, 1, 0, 0}, {0, 0, 0, -1}},
        {"Psi1", {0, 0, 0, 1}, {-1, 0, 0, 0}},
        {"Theta1", {1, 0, 0, 0}, {0, 0, 0, 1}},
        {"H4c", {0, -1, 0}, {1, 0, 0}},
    };
    for (const Case &c : cases) {
        CAPTURE(c.function);
        const HornDefinition &def = get_definition(c.function);
        ShiftVector total = c.first;
        for (std::size_t i = 0; i < total.size(); ++i)
            total[i] += c.second[i];
        ThetaOperator direct = reduce(def, total).as_operator();
        CHECK(chained(def, c.first, c.second) == direct);
        CHECK(chained(def, c.second, c.first) == direct);
    }
}

TEST_CASE("third-order functions never acquire a mixed-derivative coefficient") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(-2, 2);
    for (const HornDefinition &def : catalog()) {
        if (def.holonomic_rank != 3)
            continue;
        CAPTURE(def.name);
        for (int trial = 0; trial < 3; ++trial) {
            // Raising-heavy words grow large symbolic coefficients, so the
            // exact check keeps the total displacement small.
            ShiftVector shift(def.params.size(), 0);
            int total = 0;
            do {
                total = 0;
                for (auto &s : shift)
                    total += std::abs(s = pick(rng));
            } while (total == 0 || total > 3);
            CHECK(reduce(def, shift).q12.is_zero());
        }
    }
}

TEST_CASE("numeric reduction substitutes the parameter values") {
    const HornDefinition &def = get_definition("G1");
    const std::vector<Rational> values = {Rational(1, 3), Rational(1, 5), Rational(3, 7)};

    ReductionResult symbolic = reduce(def, {-1, -1, 0});
    ReductionResult numeric = reduce(def, {-1, -1, 0}, values);

    std::map<std::string, RationalExpr> subs;
    for (std::size_t i = 0; i < def.params.size(); ++i)
        subs.emplace(def.params[i], RationalExpr::constant(def.ctx, values[i]));
    CHECK(numeric.q0 == symbolic.q0.substitute(subs));
    CHECK(numeric.q1 == symbolic.q1.substitute(subs));
    CHECK(numeric.q2 == symbolic.q2.substitute(subs));
    CHECK(numeric.q12 == symbolic.q12.substitute(subs));

    REQUIRE(numeric.new_params.size() == 3);
    CHECK(numeric.new_params[0] == RationalExpr::constant(def.ctx, Rational(-2, 3)));
    CHECK(numeric.new_params[1] == RationalExpr::constant(def.ctx, Rational(-4, 5)));
    CHECK(numeric.new_params[2] == RationalExpr::constant(def.ctx, Rational(3, 7)));
}

TEST_CASE("numeric reduction refuses exceptional parameter values") {
    const HornDefinition &def = get_definition("G1");
    try {
        reduce(def, {-1, -1, 0}, {Rational(2), Rational(1, 5), Rational(3, 7)});
        FAIL("expected ExceptionalParameterError");
    } catch (const ExceptionalParameterError &e) {
        REQUIRE(e.triggered_forms.size() == 1);
        CHECK(e.triggered_forms[0] == "a = 2");
    }
}

TEST_CASE("series evaluation confirms the closed-form reductions") {
    const std::vector<Rational> values = {Rational(1, 3), Rational(1, 5), Rational(3, 7)};
    const Real tol("1e-10");

    SUBCASE("G1 lowered in a and b1") {
        const HornDefinition &def = get_definition("G1");
        ReductionResult r = reduce(def, {-1, -1, 0});
        VerificationReport v = verify_reduction(def, r, values, Rational(1, 10),
                                                Rational(15, 100), tol, 40);
        CHECK(v.conclusive);
        CHECK(v.passed);
        CHECK(v.relative_error < tol);
    }

    SUBCASE("H1c raised in b and c") {
        const HornDefinition &def = get_definition("H1c");
        ReductionResult r = reduce(def, {0, 1, 1});
        VerificationReport v =
            verify_reduction(def, r, values, Rational(1, 10), Rational(1, 10), tol, 40);
        CHECK(v.conclusive);
        CHECK(v.passed);
        CHECK(v.relative_error < tol);
    }

    SUBCASE("a corrupted coefficient is flagged") {
        const HornDefinition &def = get_definition("G1");
        ReductionResult r = reduce(def, {-1, -1, 0});
        r.q1 = r.q1 + r.q0;
        VerificationReport v = verify_reduction(def, r, values, Rational(1, 10),
                                                Rational(15, 100), tol, 40);
        CHECK(v.conclusive);
        CHECK_FALSE(v.passed);
        CHECK(v.relative_error > tol);
    }
}

TEST_CASE("the text rendering wraps coefficients and new parameters in braces") {
    const HornDefinition &def = get_definition("Phi1");
    CHECK(to_text(reduce(def, {0, 0, 0})) == "{{1,0,0,0},{a,b,c}}");

    ReductionResult r = reduce(def, {-1, 0, 0});
    CHECK(to_text(r) == "{{" + to_string(r.q0) + "," + to_string(r.q1) + "," +
                            to_string(r.q2) + "," + to_string(r.q12) + "},{a-1,b,c}}");
}

TEST_CASE("the JSON rendering round-trips through the expression parser") {
    const HornDefinition &def = get_definition("G1");
    ReductionResult r = reduce(def, {-1, -1, 0});

    nlohmann::json j = nlohmann::json::parse(to_json(r));
    CHECK(j["function"] == "G1");
    CHECK(j["shift"] == nlohmann::json({-1, -1, 0}));
    CHECK(parse_expr(j["coefficients"]["q0"].get<std::string>(), def.ctx) == r.q0);
    CHECK(parse_expr(j["coefficients"]["q1"].get<std::string>(), def.ctx) == r.q1);
    CHECK(parse_expr(j["coefficients"]["q2"].get<std::string>(), def.ctx) == r.q2);
    CHECK(parse_expr(j["coefficients"]["q12"].get<std::string>(), def.ctx) == r.q12);
    CHECK(j["new_params"] == nlohmann::json({"a-1", "b1-1", "b2"}));
}

TEST_CASE("the assignment rendering emits one statement per coefficient") {
    const HornDefinition &def = get_definition("Phi1");
    CHECK(to_cas(reduce(def, {0, 0, 0})) ==
          "Q0 = 1;\nQ1 = 0;\nQ2 = 0;\nQ12 = 0;\nnewparams = {a,b,c};\n");
}
