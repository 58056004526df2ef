#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hornred/catalog.hpp"
#include "hornred/rational_expr.hpp"

namespace hornred {

// A differential operator reduced to the canonical basis
//
//     T = c0 + c1*theta1 + c2*theta2 + c12*theta1*theta2
//
// with rational-function coefficients over a definition context (parameters,
// z1, z2).  Every contiguous shift of a catalogued function is expressible
// this way; rank-3 functions never need the mixed term, so c12 stays zero
// for them.
struct ThetaOperator {
    RationalExpr c0, c1, c2, c12;

    static ThetaOperator zero(const VarSetPtr &vars);
    static ThetaOperator identity(const VarSetPtr &vars);

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero() && c12.is_zero(); }
    bool is_identity() const;

    ThetaOperator operator+(const ThetaOperator &other) const;
    ThetaOperator operator-(const ThetaOperator &other) const;
    ThetaOperator scaled(const RationalExpr &factor) const;
    bool operator==(const ThetaOperator &other) const = default;

    // Coefficient access by basis index 0 -> 1, 1 -> theta1, 2 -> theta2,
    // 3 -> theta1*theta2.
    const RationalExpr &coeff(int k) const;
    RationalExpr &coeff(int k);

    // The operator with every parameter symbol shifted, name -> name + n.
    ThetaOperator shifted(const std::map<std::string, int> &shifts) const;

    // Numerical evaluation of T F given the theta moments of F: takes
    // m[i][j] = (theta1^i theta2^j F)(z) for i, j <= 1 and the point values.
    // Declared here, defined with the series code.
};

// Contiguous step operators.  Both write their coefficients at the current
// (unshifted) parameter symbols of def.ctx.
//
// For an upper parameter p carried as (p)_{mu1*n1 + mu2*n2}:
//
//     F(.., p+1, ..) = [ 1 + (mu1/p) theta1 + (mu2/p) theta2 ] F(.., p, ..)
//
// step_up_upper returns that bracket.  Shifting p up multiplies the series
// coefficient by (p + mu.n)/p, which is exactly what the bracket applies.
ThetaOperator step_up_upper(const HornDefinition &def, std::string_view param);

// For a lower parameter p carried as 1/(p)_{nu1*n1 + nu2*n2}:
//
//     F(.., p-1, ..) = [ 1 + (nu1/(p-1)) theta1 + (nu2/(p-1)) theta2 ] F(.., p, ..)
//
// since (p)_k / (p-1)_k = (p-1+k)/(p-1).
ThetaOperator step_down_lower(const HornDefinition &def, std::string_view param);

} // namespace hornred
