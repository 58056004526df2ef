#include "hornred/theta_algebra.hpp"

#include "hornred/errors.hpp"

namespace hornred {

ThetaOperator ThetaOperator::zero(const VarSetPtr &vars) {
    const RationalExpr z = RationalExpr::constant(vars, 0);
    return ThetaOperator{z, z, z, z};
}

ThetaOperator ThetaOperator::identity(const VarSetPtr &vars) {
    ThetaOperator t = zero(vars);
    t.c0 = RationalExpr::constant(vars, 1);
    return t;
}

bool ThetaOperator::is_identity() const {
    return c0.is_one() && c1.is_zero() && c2.is_zero() && c12.is_zero();
}

ThetaOperator ThetaOperator::operator+(const ThetaOperator &other) const {
    return ThetaOperator{c0 + other.c0, c1 + other.c1, c2 + other.c2, c12 + other.c12};
}

ThetaOperator ThetaOperator::operator-(const ThetaOperator &other) const {
    return ThetaOperator{c0 - other.c0, c1 - other.c1, c2 - other.c2, c12 - other.c12};
}

ThetaOperator ThetaOperator::scaled(const RationalExpr &factor) const {
    return ThetaOperator{c0 * factor, c1 * factor, c2 * factor, c12 * factor};
}

const RationalExpr &ThetaOperator::coeff(int k) const {
    switch (k) {
    case 0: return c0;
    case 1: return c1;
    case 2: return c2;
    case 3: return c12;
    default: throw DomainError("ThetaOperator::coeff: index out of range");
    }
}

RationalExpr &ThetaOperator::coeff(int k) {
    switch (k) {
    case 0: return c0;
    case 1: return c1;
    case 2: return c2;
    case 3: return c12;
    default: throw DomainError("ThetaOperator::coeff: index out of range");
    }
}

ThetaOperator ThetaOperator::shifted(const std::map<std::string, int> &shifts) const {
    return ThetaOperator{c0.shift_vars(shifts), c1.shift_vars(shifts), c2.shift_vars(shifts),
                         c12.shift_vars(shifts)};
}

namespace {

ThetaOperator step_operator(const HornDefinition &def, std::string_view param,
                            FactorRole wanted, const char *action) {
    const PochhammerFactor *f = def.find_factor(param);
    if (f == nullptr)
        throw DomainError(def.name + " has no parameter '" + std::string(param) + "'");
    if (f->role != wanted)
        throw DomainError(def.name + "." + std::string(param) + ": cannot " + action + " a " +
                          (f->role == FactorRole::Upper ? "numerator" : "denominator") +
                          " parameter this way");
    // Denominator of the bracket: p itself for an upward upper shift, p - 1
    // for a downward lower shift.
    RationalExpr den = RationalExpr::variable(def.ctx, f->param);
    if (wanted == FactorRole::Lower)
        den = den - RationalExpr::constant(def.ctx, 1);
    if (den.is_zero())
        throw DomainError("degenerate step denominator");
    ThetaOperator t = ThetaOperator::identity(def.ctx);
    t.c1 = RationalExpr::constant(def.ctx, f->mu1) / den;
    t.c2 = RationalExpr::constant(def.ctx, f->mu2) / den;
    return t;
}

} // namespace

ThetaOperator step_up_upper(const HornDefinition &def, std::string_view param) {
    return step_operator(def, param, FactorRole::Upper, "raise");
}

ThetaOperator step_down_lower(const HornDefinition &def, std::string_view param) {
    return step_operator(def, param, FactorRole::Lower, "lower");
}

} // namespace hornred
