#include "hornred/annihilator.hpp"

#include <array>
#include <functional>

#include "hornred/errors.hpp"

namespace hornred {

void ThetaPoly::add_term(int i, int j, const RationalExpr &coeff) {
    if (coeff.is_zero())
        return;
    const Key key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

RationalExpr ThetaPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RationalExpr::constant(vars_, 0) : it->second;
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly &other) const {
    ThetaPoly out = *this;
    for (const auto &[key, c] : other.terms_)
        out.add_term(key.first, key.second, c);
    return out;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly &other) const {
    ThetaPoly out = *this;
    for (const auto &[key, c] : other.terms_)
        out.add_term(key.first, key.second, RationalExpr::constant(vars_, -1) * c);
    return out;
}

ThetaPoly ThetaPoly::scaled(const RationalExpr &factor) const {
    ThetaPoly out(vars_);
    if (factor.is_zero())
        return out;
    for (const auto &[key, c] : terms_)
        out.add_term(key.first, key.second, c * factor);
    return out;
}

StepRatio coefficient_ratio(const HornDefinition &def, int axis) {
    if (axis != 1 && axis != 2)
        throw DomainError("coefficient_ratio: axis must be 1 or 2");
    std::vector<std::string> names = def.params;
    names.push_back("m1");
    names.push_back("m2");
    const VarSetPtr mvars = VarSet::make(names);
    const Polynomial m1 = Polynomial::variable(mvars, "m1");
    const Polynomial m2 = Polynomial::variable(mvars, "m2");

    Polynomial p = Polynomial::constant(mvars, 1);
    Polynomial q = p;
    for (const PochhammerFactor &f : def.factors) {
        const int k = axis == 1 ? f.mu1 : f.mu2;
        if (k == 0)
            continue;
        // (x)_{n+k} / (x)_n with x + n = param + mu1*m1 + mu2*m2.
        const Polynomial base =
            Polynomial::variable(mvars, f.param) + m1 * Rational(f.mu1) + m2 * Rational(f.mu2);
        Polynomial block = Polynomial::constant(mvars, 1);
        if (k > 0)
            for (int t = 0; t < k; ++t)
                block *= base + Polynomial::constant(mvars, t);
        else
            for (int t = 1; t <= -k; ++t)
                block *= base - Polynomial::constant(mvars, t);
        const bool grows = (f.role == FactorRole::Upper) == (k > 0);
        (grows ? p : q) *= block;
    }
    q *= (axis == 1 ? m1 : m2) + Polynomial::constant(mvars, 1);
    return {p, q};
}

namespace {

// Spread a polynomial over (params..., m1, m2) into theta words: each
// monomial's m-exponents become the word, the parameter part (times `extra`)
// becomes the coefficient over def.ctx.
void spread_terms(ThetaPoly &out, const Polynomial &src, const HornDefinition &def,
                  const RationalExpr &extra) {
    const VarSetPtr mvars = src.vars();
    const std::size_t mi1 = mvars->index_of("m1");
    const std::size_t mi2 = mvars->index_of("m2");
    const std::size_t np = def.params.size();
    for (const auto &[exps, c] : src.terms()) {
        Exponents ctx_exps(def.ctx->size(), 0);
        for (std::size_t i = 0; i < np; ++i)
            ctx_exps[i] = exps[i];
        Polynomial mono(def.ctx);
        mono.add_term(ctx_exps, c);
        out.add_term(exps[mi1], exps[mi2], RationalExpr(mono) * extra);
    }
}

} // namespace

ThetaPoly annihilator(const HornDefinition &def, int axis) {
    const StepRatio ratio = coefficient_ratio(def, axis);
    const VarSetPtr mvars = ratio.p.vars();
    const std::size_t mi = mvars->index_of(axis == 1 ? "m1" : "m2");

    ThetaPoly a(def.ctx);
    spread_terms(a, ratio.q.shift_var(mi, -1), def, RationalExpr::constant(def.ctx, 1));
    const RationalExpr z = RationalExpr::variable(def.ctx, axis == 1 ? "z1" : "z2");
    spread_terms(a, ratio.p, def, RationalExpr::constant(def.ctx, -1) * z);
    return a;
}

namespace {

ThetaOperator unit_word(const VarSetPtr &vars, int k) {
    ThetaOperator u = ThetaOperator::zero(vars);
    u.coeff(k) = RationalExpr::constant(vars, 1);
    return u;
}

// theta_axis applied to every coefficient of op, words untouched.
ThetaOperator theta_on_coefficients(const ThetaOperator &op, int axis) {
    return ThetaOperator{theta_apply(op.c0, axis), theta_apply(op.c1, axis),
                         theta_apply(op.c2, axis), theta_apply(op.c12, axis)};
}

} // namespace

RewriteRules derive_rules(const HornDefinition &def) {
    const VarSetPtr &ctx = def.ctx;
    RewriteRules rules;
    rules.def = &def;
    rules.rank = def.holonomic_rank;
    rules.r11 = rules.r22 = rules.r12 = rules.w112 = rules.w122 = ThetaOperator::zero(ctx);

    const ThetaPoly a1 = annihilator(def, 1);
    const ThetaPoly a2 = annihilator(def, 2);

    // Both annihilators are quadratic in theta.  Solve
    //     alpha_k * theta1^2 + beta_k * theta2^2 = rhs_k,   k = 1, 2
    // for the two squares, where rhs collects everything else negated.
    auto rest = [&](const ThetaPoly &a) {
        ThetaOperator t = ThetaOperator::zero(ctx);
        const RationalExpr minus_one = RationalExpr::constant(ctx, -1);
        for (const auto &[key, c] : a.terms()) {
            if (key == ThetaPoly::Key{2, 0} || key == ThetaPoly::Key{0, 2})
                continue;
            if (key == ThetaPoly::Key{0, 0})
                t.c0 = t.c0 + minus_one * c;
            else if (key == ThetaPoly::Key{1, 0})
                t.c1 = t.c1 + minus_one * c;
            else if (key == ThetaPoly::Key{0, 1})
                t.c2 = t.c2 + minus_one * c;
            else if (key == ThetaPoly::Key{1, 1})
                t.c12 = t.c12 + minus_one * c;
            else
                throw SingularSystemError(def.name + ": annihilator word of unexpected order");
        }
        return t;
    };

    const RationalExpr al1 = a1.coeff(2, 0), be1 = a1.coeff(0, 2);
    const RationalExpr al2 = a2.coeff(2, 0), be2 = a2.coeff(0, 2);
    const RationalExpr det = al1 * be2 - be1 * al2;
    if (det.is_zero())
        throw SingularSystemError(def.name + ": annihilators cannot be solved for the squares");
    const RationalExpr inv_det = RationalExpr::constant(ctx, 1) / det;
    const ThetaOperator rhs1 = rest(a1), rhs2 = rest(a2);
    rules.r11 = (rhs1.scaled(be2) - rhs2.scaled(be1)).scaled(inv_det);
    rules.r22 = (rhs2.scaled(al1) - rhs1.scaled(al2)).scaled(inv_det);

    if (rules.rank == 3) {
        // Push the squares through the extra relation and solve it for the
        // mixed word, then eliminate that word from the square rules so the
        // whole algebra closes over {1, theta1, theta2}.
        const ExtraRelation &ex = *def.extra;
        const RationalExpr d12 = ex.ct12 + ex.ct11 * rules.r11.c12 + ex.ct22 * rules.r22.c12;
        if (d12.is_zero())
            throw SingularSystemError(def.name + ": extra relation does not determine the mixed word");
        const RationalExpr scale = RationalExpr::constant(ctx, -1) / d12;
        rules.r12.c0 = (ex.c1 + ex.ct11 * rules.r11.c0 + ex.ct22 * rules.r22.c0) * scale;
        rules.r12.c1 = (ex.ct1 + ex.ct11 * rules.r11.c1 + ex.ct22 * rules.r22.c1) * scale;
        rules.r12.c2 = (ex.ct2 + ex.ct11 * rules.r11.c2 + ex.ct22 * rules.r22.c2) * scale;

        for (ThetaOperator *sq : {&rules.r11, &rules.r22}) {
            const RationalExpr mixed = sq->c12;
            *sq = *sq + rules.r12.scaled(mixed);
            sq->c12 = sq->c12 - mixed;
        }
        return rules;
    }

    // Rank 4: close the algebra at order three.  Formally applying theta2 to
    // the theta1^2 rule produces the unknown word theta1*theta2^2 (and vice
    // versa), so the two cubic words satisfy a linear fixed-point system:
    //     w112 = L1 + p0 * w122,      w122 = L2 + q0 * w112,
    // where p0, q0 are the mixed-word coefficients of the square rules.
    const RationalExpr p0 = rules.r11.c12, q0 = rules.r22.c12;

    ThetaOperator l1 = theta_on_coefficients(rules.r11, 2);
    l1.c2 = l1.c2 + rules.r11.c0;   // theta2 * 1
    l1.c12 = l1.c12 + rules.r11.c1; // theta2 * theta1
    l1 = l1 + rules.r22.scaled(rules.r11.c2); // theta2 * theta2

    ThetaOperator l2 = theta_on_coefficients(rules.r22, 1);
    l2.c1 = l2.c1 + rules.r22.c0;   // theta1 * 1
    l2.c12 = l2.c12 + rules.r22.c2; // theta1 * theta2
    l2 = l2 + rules.r11.scaled(rules.r22.c1); // theta1 * theta1

    const RationalExpr denom = RationalExpr::constant(ctx, 1) - p0 * q0;
    if (denom.is_zero())
        throw SingularSystemError(def.name + ": cubic words are not determined (rank below 4)");
    rules.w112 = (l1 + l2.scaled(p0)).scaled(RationalExpr::constant(ctx, 1) / denom);
    rules.w122 = l2 + rules.w112.scaled(q0);
    return rules;
}

RewriteRules RewriteRules::shifted(const std::map<std::string, int> &shifts) const {
    RewriteRules out;
    out.def = def;
    out.rank = rank;
    out.r11 = r11.shifted(shifts);
    out.r22 = r22.shifted(shifts);
    out.r12 = r12.shifted(shifts);
    out.w112 = w112.shifted(shifts);
    out.w122 = w122.shifted(shifts);
    return out;
}

ThetaOperator apply_theta(const ThetaOperator &op, int axis, const RewriteRules &rules) {
    if (axis != 1 && axis != 2)
        throw DomainError("apply_theta: axis must be 1 or 2");
    const VarSetPtr &ctx = rules.def->ctx;

    // Leibniz: differentiate the coefficients in place, then add the word
    // products theta_axis * (basis word), each already in reduced form.
    ThetaOperator out = theta_on_coefficients(op, axis);
    const ThetaOperator mixed = rules.rank == 3 ? rules.r12 : unit_word(ctx, 3);
    if (axis == 1) {
        if (!op.c0.is_zero())
            out = out + unit_word(ctx, 1).scaled(op.c0);
        if (!op.c1.is_zero())
            out = out + rules.r11.scaled(op.c1);
        if (!op.c2.is_zero())
            out = out + mixed.scaled(op.c2);
        if (!op.c12.is_zero())
            out = out + rules.w112.scaled(op.c12);
    } else {
        if (!op.c0.is_zero())
            out = out + unit_word(ctx, 2).scaled(op.c0);
        if (!op.c1.is_zero())
            out = out + mixed.scaled(op.c1);
        if (!op.c2.is_zero())
            out = out + rules.r22.scaled(op.c2);
        if (!op.c12.is_zero())
            out = out + rules.w122.scaled(op.c12);
    }
    return out;
}

ThetaOperator compose(const ThetaOperator &outer, const ThetaOperator &inner,
                      const RewriteRules &rules) {
    ThetaOperator out = inner.scaled(outer.c0);
    if (!outer.c1.is_zero())
        out = out + apply_theta(inner, 1, rules).scaled(outer.c1);
    ThetaOperator t2 = ThetaOperator::zero(rules.def->ctx);
    if (!outer.c2.is_zero() || !outer.c12.is_zero())
        t2 = apply_theta(inner, 2, rules);
    if (!outer.c2.is_zero())
        out = out + t2.scaled(outer.c2);
    if (!outer.c12.is_zero())
        out = out + apply_theta(t2, 1, rules).scaled(outer.c12);
    return out;
}

ThetaOperator reduce_poly(const ThetaPoly &poly, const RewriteRules &rules) {
    const VarSetPtr &ctx = rules.def->ctx;
    std::map<ThetaPoly::Key, ThetaOperator> memo;
    std::function<const ThetaOperator &(int, int)> word = [&](int i, int j) -> const ThetaOperator & {
        const ThetaPoly::Key key{i, j};
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        ThetaOperator w = ThetaOperator::zero(ctx);
        if (i == 0 && j == 0)
            w = unit_word(ctx, 0);
        else if (i == 1 && j == 0)
            w = unit_word(ctx, 1);
        else if (i == 0 && j == 1)
            w = unit_word(ctx, 2);
        else if (i == 1 && j == 1)
            w = rules.rank == 3 ? rules.r12 : unit_word(ctx, 3);
        else if (i > 0)
            w = apply_theta(word(i - 1, j), 1, rules);
        else
            w = apply_theta(word(0, j - 1), 2, rules);
        return memo.emplace(key, std::move(w)).first->second;
    };

    ThetaOperator out = ThetaOperator::zero(ctx);
    for (const auto &[key, c] : poly.terms())
        out = out + word(key.first, key.second).scaled(c);
    return out;
}

ThetaOperator invert(const ThetaOperator &s, const RewriteRules &rules) {
    const VarSetPtr &ctx = rules.def->ctx;
    const int n = rules.rank == 3 ? 3 : 4;

    // compose(T, S) is linear in the unknown coefficients of T: writing
    // T = sum_b t_b theta^b gives compose(T, S) = sum_b t_b * (theta^b o S).
    // Build those columns and solve for the identity as the right-hand side.
    std::array<ThetaOperator, 4> col{ThetaOperator::zero(ctx), ThetaOperator::zero(ctx),
                                     ThetaOperator::zero(ctx), ThetaOperator::zero(ctx)};
    col[0] = s;
    col[1] = apply_theta(s, 1, rules);
    col[2] = apply_theta(s, 2, rules);
    if (n == 4)
        col[3] = apply_theta(col[2], 1, rules);

    const RationalExpr zero = RationalExpr::constant(ctx, 0);
    std::vector<std::vector<RationalExpr>> m(n, std::vector<RationalExpr>(n + 1, zero));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            m[a][b] = col[b].coeff(a);
    m[0][n] = RationalExpr::constant(ctx, 1);

    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            throw SingularSystemError("operator is not invertible in the reduced algebra");
        std::swap(m[c], m[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero())
                continue;
            const RationalExpr f = m[r][c] / m[c][c];
            for (int k = c; k <= n; ++k)
                m[r][k] = m[r][k] - f * m[c][k];
        }
    }

    ThetaOperator t = ThetaOperator::zero(ctx);
    for (int c = 0; c < n; ++c)
        t.coeff(c) = m[c][n] / m[c][c];
    return t;
}

} // namespace hornred
