#pragma once

#include <map>
#include <optional>
#include <utility>

#include "hornred/catalog.hpp"
#include "hornred/theta_algebra.hpp"

namespace hornred {

// A polynomial in the commuting Euler operators theta1, theta2 with
// rational-function coefficients: sum of coeff * theta1^i * theta2^j.
// Coefficients stand to the left of the theta word, so multiplying by a
// further theta must go through the Leibniz rule.
class ThetaPoly {
public:
    using Key = std::pair<int, int>;

    explicit ThetaPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    const VarSetPtr &vars() const { return vars_; }
    const std::map<Key, RationalExpr> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Accumulate coeff * theta1^i theta2^j, dropping the term if it cancels.
    void add_term(int i, int j, const RationalExpr &coeff);
    RationalExpr coeff(int i, int j) const;

    ThetaPoly operator+(const ThetaPoly &other) const;
    ThetaPoly operator-(const ThetaPoly &other) const;
    ThetaPoly scaled(const RationalExpr &factor) const;

private:
    VarSetPtr vars_;
    std::map<Key, RationalExpr> terms_;
};

// The coefficient recurrence of a catalogued series along one axis, as a pair
// of polynomials over VarSet(params..., m1, m2):
//
//     C(m + e_axis) / C(m) = P(m1, m2) / Q(m1, m2).
//
// P collects the factors a step multiplies in, Q the ones it divides out
// (including the (m_axis + 1) from the factorial).
struct StepRatio {
    Polynomial p, q;
};
StepRatio coefficient_ratio(const HornDefinition &def, int axis);

// The annihilating operator obtained by clearing z_axis from the recurrence:
//
//     A_axis = Q(theta - e_axis) - z_axis * P(theta),
//
// a ThetaPoly over def.ctx that kills the series identically.
ThetaPoly annihilator(const HornDefinition &def, int axis);

// Rewrite rules that reduce any theta word modulo the annihilating ideal of
// one catalogued function to the canonical basis.  For rank 4 the basis is
// {1, theta1, theta2, theta1*theta2}; for rank 3 the extra relation removes
// the mixed word as well and every ThetaOperator below has c12 == 0.
struct RewriteRules {
    const HornDefinition *def = nullptr;
    int rank = 4;

    ThetaOperator r11;  // theta1^2        in the basis
    ThetaOperator r22;  // theta2^2        in the basis
    ThetaOperator r12;  // theta1*theta2   in the basis (rank 3 only; for
                        // rank 4 the word is itself a basis element)
    ThetaOperator w112; // theta1^2*theta2 in the basis (rank 4 only)
    ThetaOperator w122; // theta1*theta2^2 in the basis (rank 4 only)

    // The same rules with every parameter symbol shifted name -> name + n.
    RewriteRules shifted(const std::map<std::string, int> &shifts) const;
};

// Derive the rewrite rules of a function from its two annihilators (and, for
// rank 3, its extra relation).  Throws SingularSystemError if the required
// eliminations degenerate, which does not happen for catalogued input.
RewriteRules derive_rules(const HornDefinition &def);

// theta_axis applied to a reduced operator, reduced again:
// theta (c X) = theta(c) X + c (theta X) on every basis word X.
ThetaOperator apply_theta(const ThetaOperator &op, int axis, const RewriteRules &rules);

// Composition: the operator first applying `inner`, then `outer`, reduced to
// the basis.  Both must be written over the same context and against the
// same rules.
ThetaOperator compose(const ThetaOperator &outer, const ThetaOperator &inner,
                      const RewriteRules &rules);

// Reduce an arbitrary theta polynomial to the basis.  Members of the
// annihilating ideal reduce to zero.
ThetaOperator reduce_poly(const ThetaPoly &poly, const RewriteRules &rules);

// The left inverse of a step operator: T with compose(T, S) equal to the
// identity.  Throws SingularSystemError when S is not invertible in the
// reduced algebra.
ThetaOperator invert(const ThetaOperator &s, const RewriteRules &rules);

} // namespace hornred
