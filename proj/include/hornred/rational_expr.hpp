#ifndef HORNRED_RATIONAL_EXPR_HPP
#define HORNRED_RATIONAL_EXPR_HPP

#include <map>
#include <string>

#include <hornred/polynomial.hpp>

namespace hornred {

// Quotient of two polynomials in canonical form: numerator and denominator
// are coprime integer-coefficient polynomials with coprime contents, and the
// denominator's leading coefficient is positive.  Zero is 0/1.  With that
// normalization, two RationalExpr are equal as functions exactly when their
// representations are identical, so operator== is cheap and exact.
class RationalExpr {
public:
    RationalExpr() = default;
    explicit RationalExpr(Polynomial numerator); // denominator 1
    RationalExpr(Polynomial numerator, Polynomial denominator);

    static RationalExpr constant(VarSetPtr vars, const Rational &value);
    static RationalExpr variable(VarSetPtr vars, std::string_view name);

    const Polynomial &num() const { return num_; }
    const Polynomial &den() const { return den_; }
    const VarSetPtr &vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const; // throws DomainError unless is_constant()

    RationalExpr operator-() const;
    friend RationalExpr operator+(const RationalExpr &a, const RationalExpr &b);
    friend RationalExpr operator-(const RationalExpr &a, const RationalExpr &b);
    friend RationalExpr operator*(const RationalExpr &a, const RationalExpr &b);
    // Throws EvaluationError when b is identically zero.
    friend RationalExpr operator/(const RationalExpr &a, const RationalExpr &b);
    RationalExpr &operator+=(const RationalExpr &b) { return *this = *this + b; }
    RationalExpr &operator-=(const RationalExpr &b) { return *this = *this - b; }
    RationalExpr &operator*=(const RationalExpr &b) { return *this = *this * b; }
    RationalExpr &operator/=(const RationalExpr &b) { return *this = *this / b; }

    // Integer power; negative exponents invert (zero base then throws).
    RationalExpr pow(int exponent) const;

    bool operator==(const RationalExpr &other) const;
    bool operator!=(const RationalExpr &other) const { return !(*this == other); }

    // d/d var as a rational function (quotient rule).
    RationalExpr derivative(std::size_t var) const;

    // Simultaneous substitution name -> expression.  All replacements are
    // taken from the original expression, so {x->y, y->x} swaps x and y.
    // Variables not mentioned stay themselves.  Throws EvaluationError if the
    // denominator collapses to zero.
    RationalExpr substitute(const std::map<std::string, RationalExpr> &subs) const;

    // Fast path of substitute() for name -> name + integer shifts.
    RationalExpr shift_vars(const std::map<std::string, int> &shifts) const;

    // Evaluate at a full rational point; throws EvaluationError when the
    // denominator vanishes there.
    Rational eval(const std::vector<Rational> &point) const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

// theta_j = z_j d/dz_j, the Euler operator along one coordinate.  `axis` is
// 1 or 2 and selects the variable named "z1" or "z2", which must exist in
// the expression's variable set.
RationalExpr theta_apply(const RationalExpr &expr, int axis);

} // namespace hornred

#endif
