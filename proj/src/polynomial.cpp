#include <hornred/polynomial.hpp>

#include <cassert>
#include <numeric>

#include <hornred/errors.hpp>

namespace hornred {

bool GradedLexLess::operator()(const Exponents &a, const Exponents &b) const {
    assert(a.size() == b.size());
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db)
        return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

Polynomial Polynomial::constant(VarSetPtr vars, Rational value) {
    Polynomial p(std::move(vars));
    if (value != 0)
        p.terms_.emplace(Exponents(p.vars_->size(), 0), std::move(value));
    return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index, int power) {
    if (index >= vars->size())
        throw DomainError("variable index out of range");
    if (power < 0)
        throw DomainError("polynomial variable powers must be nonnegative");
    Polynomial p(std::move(vars));
    Exponents mono(p.vars_->size(), 0);
    mono[index] = power;
    p.terms_.emplace(std::move(mono), Rational(1));
    return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::string_view name, int power) {
    std::size_t idx = vars->index_of(name);
    return variable(std::move(vars), idx, power);
}

bool Polynomial::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && total_degree() == 0;
}

bool Polynomial::is_one() const {
    return is_constant() && constant_value() == 1;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw DomainError("constant_value() on a non-constant polynomial");
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty())
        return -1;
    const Exponents &lead = terms_.rbegin()->first; // graded order: max has top degree
    return std::accumulate(lead.begin(), lead.end(), 0);
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto &[mono, coeff] : terms_) {
        (void)coeff;
        if (mono[var] > d)
            d = mono[var];
    }
    return terms_.empty() ? -1 : d;
}

const Exponents &Polynomial::leading_monomial() const {
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const Rational &Polynomial::leading_coefficient() const {
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Exponents &mono, const Rational &coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto &[mono, coeff] : terms_)
        r.terms_.emplace(mono, -coeff);
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
    require_same_vars(vars_, other.vars_, "polynomial +");
    for (const auto &[mono, coeff] : other.terms_)
        add_term(mono, coeff);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
    require_same_vars(vars_, other.vars_, "polynomial -");
    for (const auto &[mono, coeff] : other.terms_)
        add_term(mono, -coeff);
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    require_same_vars(a.vars_, b.vars_, "polynomial *");
    Polynomial r(a.vars_);
    Exponents mono(a.vars_ ? a.vars_->size() : 0, 0);
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < mono.size(); ++i)
                mono[i] = ma[i] + mb[i];
            r.add_term(mono, ca * cb);
        }
    }
    return r;
}

Polynomial &Polynomial::operator*=(const Rational &scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[mono, coeff] : terms_) {
        (void)mono;
        coeff *= scalar;
    }
    return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = Polynomial::constant(vars_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent)
            base *= base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial &other) const {
    if (!same_vars(vars_, other.vars_))
        return false;
    return terms_ == other.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(vars_);
    for (const auto &[mono, coeff] : terms_) {
        if (mono[var] == 0)
            continue;
        Exponents m = mono;
        Rational c = coeff * mono[var];
        m[var] -= 1;
        r.add_term(m, c);
    }
    return r;
}

Polynomial Polynomial::shift_var(std::size_t var, const Rational &offset) const {
    Polynomial replacement = Polynomial::variable(vars_, var);
    replacement += Polynomial::constant(vars_, offset);
    return substitute_var(var, replacement);
}

Polynomial Polynomial::substitute_var(std::size_t var, const Polynomial &replacement) const {
    require_same_vars(vars_, replacement.vars(), "substitute_var");
    Polynomial result(vars_);
    std::vector<Polynomial> powers{Polynomial::constant(vars_, 1)}; // powers[k] = repl^k
    for (const auto &[mono, coeff] : terms_) {
        int e = mono[var];
        while ((int)powers.size() <= e)
            powers.push_back(powers.back() * replacement);
        Exponents rest = mono;
        rest[var] = 0;
        Polynomial term(vars_);
        term.add_term(rest, coeff);
        result += term * powers[e];
    }
    return result;
}

Rational Polynomial::eval(const std::vector<Rational> &point) const {
    if (point.size() != (vars_ ? vars_->size() : 0))
        throw DomainError("evaluation point has wrong dimension");
    Rational sum(0);
    for (const auto &[mono, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i)
            for (int k = 0; k < mono[i]; ++k)
                term *= point[i];
        sum += term;
    }
    return sum;
}

} // namespace hornred
