#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hornred/polynomial.hpp"
#include "hornred/rational_expr.hpp"

namespace hornred {

// One Pochhammer symbol in the series coefficient of a Horn-type function.
// The factor contributes (param)_{mu1*n1 + mu2*n2} to the numerator (Upper)
// or the denominator (Lower) of the coefficient C(n1, n2); the 1/(n1! n2!)
// common to all thirty functions is kept implicit.
enum class FactorRole { Upper, Lower };

struct PochhammerFactor {
    std::string param;
    FactorRole role = FactorRole::Upper;
    int mu1 = 0;
    int mu2 = 0;
};

// The extra second-order relation satisfied by the rank-3 functions, written
// against the basis {1, theta1, theta2, theta1^2, theta2^2, theta1*theta2}:
//
//     c1*F + ct1*(th1 F) + ct2*(th2 F) + ct11*(th1^2 F)
//          + ct22*(th2^2 F) + ct12*(th1 th2 F) = 0.
//
// It is this relation that cuts the holonomic rank from four to three and
// lets the mixed derivative be rewritten in terms of lower-order ones.
struct ExtraRelation {
    RationalExpr c1, ct1, ct2, ct11, ct22, ct12;
};

// Static description of one catalogued function F(params; z1, z2).
struct HornDefinition {
    std::string name;
    std::vector<std::string> params;
    std::vector<PochhammerFactor> factors;
    int holonomic_rank = 4;
    std::optional<ExtraRelation> extra; // engaged exactly when rank is 3

    // Linear combinations of the parameters whose integer values make some
    // shift operator denominator vanish.  Polynomials over VarSet(params).
    std::vector<Polynomial> exceptional;

    // Non-axis components of the singular locus, over VarSet{z1, z2}.
    std::vector<Polynomial> singular_locus;

    std::vector<std::string> notes;

    // Working variable set: the parameters in order, then z1, z2.  All
    // operator coefficients for this function live over this set.
    VarSetPtr ctx;

    // Factor a given parameter appears in, or nullptr.  Every catalogued
    // parameter appears in exactly one factor.
    const PochhammerFactor *find_factor(std::string_view param) const;
};

// All catalogued functions, in catalog order.
const std::vector<HornDefinition> &catalog();

// The catalogued names, in catalog order.
std::vector<std::string> list_functions();

// Case-insensitive lookup; throws UnknownFunctionError listing the valid
// names when nothing matches.
const HornDefinition &get_definition(std::string_view name);

// Evaluate the exceptional forms of `def` at the given parameter values
// (aligned with def.params) and return a rendering of every form that takes
// an integer value, e.g. "a+b1 = -2".  An empty result means the point is
// admissible for arbitrary integer shifts.
std::vector<std::string> exceptional_check(const HornDefinition &def,
                                           const std::vector<Rational> &values);

} // namespace hornred
