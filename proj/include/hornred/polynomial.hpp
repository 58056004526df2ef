#ifndef HORNRED_POLYNOMIAL_HPP
#define HORNRED_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include <hornred/varset.hpp>

namespace hornred {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Exponent vector, one entry per variable of the owning VarSet.
using Exponents = std::vector<int>;

// Graded lexicographic order: compare total degree first, then exponents of
// the earlier (more significant) variables.
struct GradedLexLess {
    bool operator()(const Exponents &a, const Exponents &b) const;
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed, shared variable set.  The term map never stores zero coefficients,
// so equality of values is equality of representations.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    Polynomial() = default; // zero over the empty variable set; of limited use
    explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VarSetPtr vars, Rational value);
    static Polynomial variable(VarSetPtr vars, std::size_t index, int power = 1);
    static Polynomial variable(VarSetPtr vars, std::string_view name, int power = 1);

    const VarSetPtr &vars() const { return vars_; }
    const TermMap &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    int total_degree() const;            // degree of the zero polynomial is -1
    int degree_in(std::size_t var) const;

    // Leading term under graded lex; polynomial must be nonzero.
    const Exponents &leading_monomial() const;
    const Rational &leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial &operator*=(const Polynomial &other) { return *this = *this * other; }
    Polynomial &operator*=(const Rational &scalar);
    friend Polynomial operator*(Polynomial a, const Rational &s) { return a *= s; }
    friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }

    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial &other) const;
    bool operator!=(const Polynomial &other) const { return !(*this == other); }

    // Partial derivative with respect to one variable.
    Polynomial derivative(std::size_t var) const;

    // Substitute var -> var + offset (a ring automorphism; used to move
    // operator coefficients between shifted parameter contexts).
    Polynomial shift_var(std::size_t var, const Rational &offset) const;

    // Substitute var -> replacement polynomial (same variable set).
    Polynomial substitute_var(std::size_t var, const Polynomial &replacement) const;

    // Evaluate at a full point, one value per variable.
    Rational eval(const std::vector<Rational> &point) const;

    // Add `coeff * monomial` in place; drops the term if it cancels to zero.
    void add_term(const Exponents &mono, const Rational &coeff);

private:
    VarSetPtr vars_;
    TermMap terms_;
};

// --- gcd layer (poly_gcd.cpp) ---------------------------------------------

// Greatest common divisor with Z-style content handling: for inputs with
// integer coefficients this is the Z[x..] gcd (content gcd included), with
// positive leading coefficient; the result is canonical.  gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial &a, const Polynomial &b);

// Exact division; throws DomainError when the division leaves a remainder.
Polynomial poly_div_exact(const Polynomial &a, const Polynomial &b);

// Writes p = factor * primitive where `primitive` has integer coefficients,
// content 1 and positive leading coefficient; factor carries sign and scale.
// p must be nonzero.
struct PrimitivePart {
    Rational factor;
    Polynomial primitive;
};
PrimitivePart make_primitive(const Polynomial &p);

} // namespace hornred

#endif
