#include "hornred/reduction.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hornred/errors.hpp"
#include "hornred/expr_io.hpp"

namespace hornred {

namespace {

using Subs = std::map<std::string, RationalExpr>;

// Rewrite rules are a pure per-function derivation, derived once and shared
// behind a read-mostly cache.
const RewriteRules &cached_rules(const HornDefinition &def) {
    static std::map<std::string, RewriteRules> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(def.name);
    if (it == cache.end())
        it = cache.emplace(def.name, derive_rules(def)).first;
    return it->second;
}

ThetaOperator direct_step(const HornDefinition &def, const std::string &param) {
    const PochhammerFactor *f = def.find_factor(param);
    if (!f)
        throw DomainError(def.name + " has no parameter '" + param + "'");
    return f->role == FactorRole::Upper ? step_up_upper(def, param)
                                        : step_down_lower(def, param);
}

// Unit inverses are pure per-(function, parameter) derivations, likewise
// cached; the numeric path substitutes into the cached symbolic quadruple
// instead of solving again.
const ThetaOperator &cached_inverse(const HornDefinition &def, const std::string &param) {
    static std::map<std::pair<std::string, std::string>, ThetaOperator> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(def.name, param);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, invert(direct_step(def, param), cached_rules(def))).first;
    return it->second;
}

ThetaOperator substituted(const ThetaOperator &op, const Subs *subs) {
    if (!subs)
        return op;
    return {op.c0.substitute(*subs), op.c1.substitute(*subs), op.c2.substitute(*subs),
            op.c12.substitute(*subs)};
}

RewriteRules substituted(const RewriteRules &rules, const Subs *subs) {
    if (!subs)
        return rules;
    RewriteRules out = rules;
    out.r11 = substituted(rules.r11, subs);
    out.r22 = substituted(rules.r22, subs);
    out.r12 = substituted(rules.r12, subs);
    out.w112 = substituted(rules.w112, subs);
    out.w122 = substituted(rules.w122, subs);
    return out;
}

std::map<std::string, int> nonzero_shifts(const HornDefinition &def, const ShiftVector &shift) {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < shift.size(); ++i)
        if (shift[i] != 0)
            out.emplace(def.params[i], shift[i]);
    return out;
}

// The shared reduction engine.  When `subs` is non-null every operator and
// rule has the parameter symbols replaced by fixed rational values before any
// composition, which keeps the arithmetic in the two series variables.
ThetaOperator reduce_operator(const HornDefinition &def, const ShiftVector &shift,
                              const Subs *subs) {
    const std::vector<UnitStep> steps = plan_path(def, shift);
    if (steps.empty())
        return ThetaOperator::identity(def.ctx);

    // Every word is rewritten modulo the annihilators of the fully shifted
    // function the chain ends on, so the rules are taken there.
    const RewriteRules rules =
        substituted(cached_rules(def).shifted(nonzero_shifts(def, shift)), subs);

    // The step at position j relates the function at the accumulated shift
    // t_j to the one at t_{j+1}.  Moving toward the target needs the direct
    // operator when it lowers an upper or raises a lower parameter, and the
    // inverse operator in the other two cases; direct operators are written
    // at the far end of their move, inverses at the near end.
    std::vector<ThetaOperator> ops;
    std::map<std::string, int> at;
    for (const UnitStep &step : steps) {
        const bool upper = def.find_factor(step.param)->role == FactorRole::Upper;
        const bool use_direct = (upper && step.direction < 0) || (!upper && step.direction > 0);
        std::map<std::string, int> next = at;
        if ((next[step.param] += step.direction) == 0)
            next.erase(step.param);
        const ThetaOperator &base =
            use_direct ? direct_step(def, step.param) : cached_inverse(def, step.param);
        ops.push_back(substituted(base.shifted(use_direct ? next : at), subs));
        at = std::move(next);
    }

    // A reduced product absorbs further factors only from the left, so the
    // chain folds from the last step outward.
    ThetaOperator acc = ops.back();
    for (auto it = ops.rbegin() + 1; it != ops.rend(); ++it)
        acc = compose(*it, acc, rules);
    return acc;
}

} // namespace

std::vector<UnitStep> plan_path(const HornDefinition &def, const ShiftVector &shift) {
    if (shift.size() != def.params.size())
        throw DomainError("shift vector for " + def.name + " must have " +
                          std::to_string(def.params.size()) + " entries, got " +
                          std::to_string(shift.size()));
    std::vector<UnitStep> steps;
    for (std::size_t i = 0; i < shift.size(); ++i) {
        const int direction = shift[i] > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(shift[i]); ++k)
            steps.push_back({def.params[i], direction});
    }
    return steps;
}

ReductionResult reduce(const HornDefinition &def, const ShiftVector &shift) {
    plan_path(def, shift); // validates the shift length

    ReductionResult res;
    res.function = def.name;
    res.shift = shift;
    for (std::size_t i = 0; i < def.params.size(); ++i)
        res.new_params.push_back(RationalExpr::variable(def.ctx, def.params[i]) +
                                 RationalExpr::constant(def.ctx, shift[i]));

    const ThetaOperator op = reduce_operator(def, shift, nullptr);
    res.q0 = op.c0;
    res.q1 = op.c1;
    res.q2 = op.c2;
    res.q12 = op.c12;
    return res;
}

ReductionResult reduce(const HornDefinition &def, const ShiftVector &shift,
                       const std::vector<Rational> &param_values) {
    plan_path(def, shift); // validates the shift length

    std::vector<std::string> triggered = exceptional_check(def, param_values);
    if (!triggered.empty()) {
        std::string msg = def.name + " parameters are exceptional:";
        for (const auto &t : triggered)
            msg += " [" + t + "]";
        throw ExceptionalParameterError(msg, std::move(triggered));
    }

    Subs subs;
    for (std::size_t i = 0; i < def.params.size(); ++i)
        subs.emplace(def.params[i], RationalExpr::constant(def.ctx, param_values[i]));

    ReductionResult res;
    res.function = def.name;
    res.shift = shift;
    for (std::size_t i = 0; i < def.params.size(); ++i)
        res.new_params.push_back(
            RationalExpr::constant(def.ctx, param_values[i] + shift[i]));

    const ThetaOperator op = reduce_operator(def, shift, &subs);
    res.q0 = op.c0;
    res.q1 = op.c1;
    res.q2 = op.c2;
    res.q12 = op.c12;
    return res;
}

VerificationReport verify_reduction(const HornDefinition &def, const ReductionResult &result,
                                    const std::vector<Rational> &param_values, const Rational &z1,
                                    const Rational &z2, const Real &tol, int max_order) {
    if (result.function != def.name)
        throw DomainError("verify_reduction: result is for " + result.function + ", not " +
                          def.name);
    if (param_values.size() != def.params.size() || result.shift.size() != def.params.size())
        throw DomainError("verify_reduction: expected " + std::to_string(def.params.size()) +
                          " parameter values and shift entries for " + def.name);

    std::vector<Rational> shifted_values = param_values;
    for (std::size_t i = 0; i < shifted_values.size(); ++i)
        shifted_values[i] += result.shift[i];

    const SeriesValue lhs = eval_series(def, param_values, z1, z2, max_order);
    const SeriesValue rhs = eval_series(def, shifted_values, z1, z2, max_order);

    VerificationReport report;
    report.conclusive = lhs.converged && rhs.converged;
    if (!report.conclusive)
        return report;

    std::vector<Rational> vals = param_values;
    vals.push_back(z1);
    vals.push_back(z2);
    const Real terms[4] = {to_real(result.q0.eval(vals)) * rhs.theta(0, 0),
                           to_real(result.q1.eval(vals)) * rhs.theta(1, 0),
                           to_real(result.q2.eval(vals)) * rhs.theta(0, 1),
                           to_real(result.q12.eval(vals)) * rhs.theta(1, 1)};
    const Real applied = terms[0] + terms[1] + terms[2] + terms[3];

    // Backward-style relative error: the residual is measured against the
    // magnitudes of the summands, not the (possibly heavily cancelled) sum.
    // A wrong quadruple still shows up at order one, while an exact quadruple
    // is never failed just because the applied side is ill-conditioned.
    const Real scale =
        abs(lhs.value()) + abs(terms[0]) + abs(terms[1]) + abs(terms[2]) + abs(terms[3]);
    report.relative_error = scale > 0 ? Real(abs(lhs.value() - applied) / scale) : Real(0);
    report.passed = report.relative_error < tol;
    return report;
}

std::string to_text(const ReductionResult &result) {
    std::ostringstream out;
    out << "{{" << to_string(result.q0) << "," << to_string(result.q1) << ","
        << to_string(result.q2) << "," << to_string(result.q12) << "},{";
    for (std::size_t i = 0; i < result.new_params.size(); ++i) {
        if (i)
            out << ",";
        out << to_string(result.new_params[i]);
    }
    out << "}}";
    return out.str();
}

std::string to_json(const ReductionResult &result) {
    nlohmann::json j;
    j["function"] = result.function;
    j["shift"] = result.shift;
    j["coefficients"] = {{"q0", to_string(result.q0)},
                         {"q1", to_string(result.q1)},
                         {"q2", to_string(result.q2)},
                         {"q12", to_string(result.q12)}};
    std::vector<std::string> names;
    for (const auto &p : result.new_params)
        names.push_back(to_string(p));
    j["new_params"] = names;
    return j.dump(2);
}

std::string to_cas(const ReductionResult &result) {
    std::ostringstream out;
    out << "Q0 = " << to_string(result.q0) << ";\n";
    out << "Q1 = " << to_string(result.q1) << ";\n";
    out << "Q2 = " << to_string(result.q2) << ";\n";
    out << "Q12 = " << to_string(result.q12) << ";\n";
    out << "newparams = {";
    for (std::size_t i = 0; i < result.new_params.size(); ++i) {
        if (i)
            out << ",";
        out << to_string(result.new_params[i]);
    }
    out << "};\n";
    return out.str();
}

} // namespace hornred
