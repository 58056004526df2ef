#pragma once

#include <string>
#include <vector>

#include "hornred/annihilator.hpp"
#include "hornred/catalog.hpp"
#include "hornred/series.hpp"
#include "hornred/theta_algebra.hpp"

namespace hornred {

// Integer shift applied to a function's parameters, one entry per parameter
// in catalog order.  Entries may be any integers, including zero.
using ShiftVector = std::vector<int>;

// One contiguous move of a single parameter by +1 or -1.
struct UnitStep {
    std::string param;
    int direction = 0; // +1 raises the parameter, -1 lowers it
};

// The deterministic decomposition of a shift into unit steps: parameters in
// catalog order, each contributing |shift_i| steps in its required direction.
// Throws DomainError when the shift length does not match the parameter
// count.
std::vector<UnitStep> plan_path(const HornDefinition &def, const ShiftVector &shift);

// The outcome of a differential reduction: the operator quadruple satisfying
//
//     F(params) = (q0 + q1*theta1 + q2*theta2 + q12*theta1*theta2) F(new_params)
//
// with every coefficient written at the original parameter symbols, and
// new_params the original symbols offset by the shift.  Rank-3 functions
// always come out with q12 identically zero.
struct ReductionResult {
    std::string function;
    ShiftVector shift;
    RationalExpr q0, q1, q2, q12;
    std::vector<RationalExpr> new_params;

    ThetaOperator as_operator() const { return ThetaOperator{q0, q1, q2, q12}; }
};

// Compose the unit-step operators along plan_path(def, shift) and reduce the
// product to the canonical basis.  Raising an upper parameter and lowering a
// lower one use the inverse operators; the opposite directions use the direct
// steps.  A zero shift returns the identity quadruple.
ReductionResult reduce(const HornDefinition &def, const ShiftVector &shift);

// The same reduction with the parameters bound to concrete rational values:
// the values are gated through exceptional_check (ExceptionalParameterError
// listing the triggered forms on refusal) and then substituted, leaving
// coefficients in z1, z2 only and numeric new_params.
ReductionResult reduce(const HornDefinition &def, const ShiftVector &shift,
                       const std::vector<Rational> &param_values);

// Numerical check of a ReductionResult at one admissible point: evaluates
// F(params) directly and through the quadruple applied to the theta moments
// of F(params + shift), both as truncated series.  The relative error is the
// residual divided by the summed magnitudes of all five contributions, so a
// heavily cancelling (ill-conditioned) applied side does not masquerade as a
// wrong reduction.
struct VerificationReport {
    bool conclusive = false; // both series passed their tail tests
    bool passed = false;     // conclusive and within tolerance
    Real relative_error{0};
};

VerificationReport verify_reduction(const HornDefinition &def, const ReductionResult &result,
                                    const std::vector<Rational> &param_values, const Rational &z1,
                                    const Rational &z2, const Real &tol, int max_order = 40);

// Renderings of a result: the nested-brace text form
// {{Q0,Q1,Q2,Q12},{newparams}}, a JSON document (function, shift, coefficient
// strings, new_params), and an assignment-style snippet that pastes into a
// computer-algebra session.
std::string to_text(const ReductionResult &result);
std::string to_json(const ReductionResult &result);
std::string to_cas(const ReductionResult &result);

} // namespace hornred
