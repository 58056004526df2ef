#include <hornred/rational_expr.hpp>

#include <cassert>

#include <hornred/errors.hpp>

namespace hornred {

namespace {

bool integral(const Polynomial &p) {
    for (const auto &[mono, c] : p.terms()) {
        (void)mono;
        if (denominator(c) != 1)
            return false;
    }
    return true;
}

Integer integer_content(const Polynomial &p) {
    Integer g(0);
    for (const auto &[mono, c] : p.terms()) {
        (void)mono;
        g = boost::multiprecision::gcd(g, Integer(numerator(c)));
        if (g == 1)
            break;
    }
    return g;
}

// Scalar canonical form for a pair whose polynomial parts are already
// coprime: integer coefficients, coprime contents, positive leading
// denominator coefficient.  The arithmetic below only ever combines canonical
// operands, whose parts are integral, so the fallback branch is insurance.
void scalar_reduce(Polynomial &num, Polynomial &den) {
    if (num.is_zero()) {
        den = Polynomial::constant(num.vars(), 1);
        return;
    }
    if (!integral(num) || !integral(den)) {
        PrimitivePart pn = make_primitive(num);
        PrimitivePart pd = make_primitive(den);
        Rational ratio = pn.factor / pd.factor;
        num = pn.primitive;
        num *= Rational(numerator(ratio));
        den = pd.primitive;
        den *= Rational(denominator(ratio));
        return;
    }
    const Integer g =
        den.is_one() ? Integer(1)
                     : boost::multiprecision::gcd(integer_content(num), integer_content(den));
    const bool flip = den.leading_coefficient() < 0;
    if (g > 1) {
        const Rational inv = flip ? Rational(-1, g) : Rational(1, g);
        num *= inv;
        den *= inv;
    } else if (flip) {
        num *= Rational(-1);
        den *= Rational(-1);
    }
}

} // namespace

RationalExpr::RationalExpr(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.vars(), 1)) {
    normalize();
}

RationalExpr::RationalExpr(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    require_same_vars(num_.vars(), den_.vars(), "RationalExpr");
    normalize();
}

RationalExpr RationalExpr::constant(VarSetPtr vars, const Rational &value) {
    return RationalExpr(Polynomial::constant(std::move(vars), value));
}

RationalExpr RationalExpr::variable(VarSetPtr vars, std::string_view name) {
    return RationalExpr(Polynomial::variable(std::move(vars), name));
}

bool RationalExpr::is_one() const { return num_.is_one() && den_.is_one(); }

Rational RationalExpr::constant_value() const {
    if (!is_constant())
        throw DomainError("constant_value() on a non-constant expression");
    return num_.constant_value() / den_.constant_value();
}

void RationalExpr::normalize() {
    if (den_.is_zero())
        throw EvaluationError("division by an identically zero expression");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.vars(), 1);
        return;
    }
    if (!den_.is_one()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
    }
    // Scalar normalization: integer coefficients, coprime contents, positive
    // leading coefficient in the denominator.
    PrimitivePart pn = make_primitive(num_);
    PrimitivePart pd = make_primitive(den_);
    Rational ratio = pn.factor / pd.factor; // gmp keeps this in lowest terms, q > 0
    num_ = pn.primitive;
    num_ *= Rational(numerator(ratio));
    den_ = pd.primitive;
    den_ *= Rational(denominator(ratio));
}

RationalExpr RationalExpr::operator-() const {
    RationalExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

// The sum, difference, product and quotient below keep every intermediate
// cancellation small, in the manner of rational arithmetic over Z: cancel
// crosswise before multiplying out, and for sums split off the common part of
// the denominators first.  Canonical operands make every division exact and
// leave the results coprime without a final full-size gcd.

RationalExpr operator+(const RationalExpr &a, const RationalExpr &b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    RationalExpr r;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        if (r.num_.is_zero())
            r.den_ = Polynomial::constant(r.num_.vars(), 1);
        return r;
    }
    const Polynomial g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    } else {
        // With d2' = den(b)/g, the sum is (n1*d2' + n2*d1')/(d1'*d2'*g) and
        // anything cancelling against the denominator must divide g.
        const Polynomial da = poly_div_exact(a.den_, g);
        const Polynomial db = poly_div_exact(b.den_, g);
        Polynomial t = a.num_ * db + b.num_ * da;
        if (t.is_zero()) {
            r.num_ = std::move(t);
            r.den_ = Polynomial::constant(a.num_.vars(), 1);
            return r;
        }
        const Polynomial g2 = poly_gcd(t, g);
        if (g2.is_one()) {
            r.num_ = std::move(t);
            r.den_ = da * b.den_;
        } else {
            r.num_ = poly_div_exact(t, g2);
            r.den_ = da * poly_div_exact(b.den_, g2);
        }
    }
    scalar_reduce(r.num_, r.den_);
    return r;
}

RationalExpr operator-(const RationalExpr &a, const RationalExpr &b) { return a + (-b); }

RationalExpr operator*(const RationalExpr &a, const RationalExpr &b) {
    if (a.is_zero())
        return a;
    if (b.is_zero())
        return b;
    if (a.is_constant() || b.is_constant()) {
        const RationalExpr &expr = a.is_constant() ? b : a;
        const Rational s = (a.is_constant() ? a : b).constant_value();
        RationalExpr r;
        r.num_ = expr.num_;
        r.num_ *= Rational(numerator(s));
        r.den_ = expr.den_;
        r.den_ *= Rational(denominator(s));
        scalar_reduce(r.num_, r.den_);
        return r;
    }
    const Polynomial g1 = poly_gcd(a.num_, b.den_);
    const Polynomial g2 = poly_gcd(b.num_, a.den_);
    RationalExpr r;
    r.num_ = (g1.is_one() ? a.num_ : poly_div_exact(a.num_, g1)) *
             (g2.is_one() ? b.num_ : poly_div_exact(b.num_, g2));
    r.den_ = (g2.is_one() ? a.den_ : poly_div_exact(a.den_, g2)) *
             (g1.is_one() ? b.den_ : poly_div_exact(b.den_, g1));
    scalar_reduce(r.num_, r.den_);
    return r;
}

RationalExpr operator/(const RationalExpr &a, const RationalExpr &b) {
    if (b.is_zero())
        throw EvaluationError("division by an identically zero expression");
    if (a.is_zero())
        return a;
    if (b.is_constant()) {
        const Rational s = b.constant_value();
        RationalExpr r;
        r.num_ = a.num_;
        r.num_ *= Rational(denominator(s));
        r.den_ = a.den_;
        r.den_ *= Rational(numerator(s));
        scalar_reduce(r.num_, r.den_);
        return r;
    }
    const Polynomial g1 = poly_gcd(a.num_, b.num_);
    const Polynomial g2 = poly_gcd(a.den_, b.den_);
    RationalExpr r;
    r.num_ = (g1.is_one() ? a.num_ : poly_div_exact(a.num_, g1)) *
             (g2.is_one() ? b.den_ : poly_div_exact(b.den_, g2));
    r.den_ = (g2.is_one() ? a.den_ : poly_div_exact(a.den_, g2)) *
             (g1.is_one() ? b.num_ : poly_div_exact(b.num_, g1));
    scalar_reduce(r.num_, r.den_);
    return r;
}

RationalExpr RationalExpr::pow(int exponent) const {
    if (exponent < 0) {
        if (is_zero())
            throw EvaluationError("negative power of the zero expression");
        RationalExpr inv;
        inv.num_ = den_;
        inv.den_ = num_;
        inv.normalize(); // fixes the denominator sign convention
        return inv.pow(-exponent);
    }
    RationalExpr r;
    r.num_ = num_.pow((unsigned)exponent);
    r.den_ = den_.pow((unsigned)exponent);
    // num and den stay coprime; scalar form survives powering (contents of
    // powers are powers of contents, still coprime; lc stays positive).
    return r;
}

bool RationalExpr::operator==(const RationalExpr &other) const {
    return num_ == other.num_ && den_ == other.den_;
}

RationalExpr RationalExpr::derivative(std::size_t var) const {
    Polynomial t = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    if (den_.is_one())
        return RationalExpr(std::move(t));
    // Cancel the quotient rule's den^2 in two stages so each gcd stays small.
    RationalExpr first(std::move(t), den_);
    if (first.is_zero())
        return first;
    RationalExpr recip;
    recip.num_ = Polynomial::constant(vars(), 1);
    recip.den_ = den_;
    return first * recip;
}

RationalExpr RationalExpr::substitute(const std::map<std::string, RationalExpr> &subs) const {
    const VarSetPtr &vs = vars();
    std::vector<RationalExpr> repl(vs->size());
    for (const auto &[name, value] : subs) {
        std::size_t idx = vs->index_of(name); // throws on unknown names
        require_same_vars(vs, value.vars(), "substitute");
        repl[idx] = value;
    }
    for (std::size_t i = 0; i < repl.size(); ++i)
        if (!repl[i].vars())
            repl[i] = RationalExpr::variable(vs, vs->name(i));

    auto eval_poly = [&](const Polynomial &p) {
        std::vector<std::vector<RationalExpr>> powers(repl.size());
        for (std::size_t i = 0; i < repl.size(); ++i)
            powers[i].push_back(RationalExpr::constant(vs, 1));
        RationalExpr sum = RationalExpr::constant(vs, 0);
        for (const auto &[mono, coeff] : p.terms()) {
            RationalExpr term = RationalExpr::constant(vs, coeff);
            for (std::size_t i = 0; i < mono.size(); ++i) {
                while ((int)powers[i].size() <= mono[i])
                    powers[i].push_back(powers[i].back() * repl[i]);
                term *= powers[i][mono[i]];
            }
            sum += term;
        }
        return sum;
    };

    RationalExpr n = eval_poly(num_);
    RationalExpr d = eval_poly(den_);
    if (d.is_zero())
        throw EvaluationError("substitution makes the denominator identically zero");
    return n / d;
}

RationalExpr RationalExpr::shift_vars(const std::map<std::string, int> &shifts) const {
    // var -> var + k is a ring automorphism: it preserves coprimality of
    // num/den and the leading (top-degree) coefficients, so only the scalar
    // normalization has to be redone.
    Polynomial n = num_, d = den_;
    for (const auto &[name, offset] : shifts) {
        if (offset == 0)
            continue;
        std::size_t idx = vars()->index_of(name);
        n = n.shift_var(idx, Rational(offset));
        d = d.shift_var(idx, Rational(offset));
    }
    RationalExpr r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.num_.is_zero()) {
        r.den_ = Polynomial::constant(num_.vars(), 1);
        return r;
    }
    PrimitivePart pn = make_primitive(r.num_);
    PrimitivePart pd = make_primitive(r.den_);
    Rational ratio = pn.factor / pd.factor;
    r.num_ = pn.primitive;
    r.num_ *= Rational(numerator(ratio));
    r.den_ = pd.primitive;
    r.den_ *= Rational(denominator(ratio));
    return r;
}

Rational RationalExpr::eval(const std::vector<Rational> &point) const {
    Rational d = den_.eval(point);
    if (d == 0)
        throw EvaluationError("denominator vanishes at the evaluation point");
    return num_.eval(point) / d;
}

RationalExpr theta_apply(const RationalExpr &expr, int axis) {
    if (axis != 1 && axis != 2)
        throw DomainError("theta axis must be 1 or 2");
    const char *name = axis == 1 ? "z1" : "z2";
    std::size_t idx = expr.vars()->index_of(name);
    return RationalExpr::variable(expr.vars(), name) * expr.derivative(idx);
}

} // namespace hornred
