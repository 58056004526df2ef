#include <hornred/expr_io.hpp>

#include <cctype>
#include <sstream>

#include <hornred/errors.hpp>

namespace hornred {

namespace {

void print_monomial(std::ostream &os, const VarSet &vars, const Exponents &mono,
                    const Rational &coeff_abs) {
    bool printed = false;
    if (coeff_abs != 1) {
        os << coeff_abs;
        printed = true;
    }
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0)
            continue;
        if (printed)
            os << '*';
        os << vars.name(i);
        if (mono[i] != 1)
            os << '^' << mono[i];
        printed = true;
    }
    if (!printed)
        os << 1;
}

// True when the polynomial prints as one token chain without '+'/'-': a
// positive constant or a coefficient-1 power of a single variable.  Such a
// denominator can follow '/' without parentheses.
bool is_plain_factor(const Polynomial &p) {
    if (p.terms().size() != 1)
        return false;
    const auto &[mono, coeff] = *p.terms().begin();
    if (coeff < 0)
        return false;
    int nvars = 0;
    for (int e : mono)
        if (e > 0)
            ++nvars;
    if (nvars == 0)
        return denominator(coeff) == 1;
    return nvars == 1 && coeff == 1;
}

} // namespace

std::string to_string(const Polynomial &p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex order makes the rendering canonical.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto &[mono, coeff] = *it;
        if (first) {
            if (coeff < 0)
                os << '-';
            first = false;
        } else {
            os << (coeff < 0 ? '-' : '+');
        }
        print_monomial(os, *p.vars(), mono, abs(coeff));
    }
    return os.str();
}

std::string to_string(const RationalExpr &r) {
    if (r.den().is_one())
        return to_string(r.num());
    std::ostringstream os;
    if (r.num().terms().size() == 1)
        os << to_string(r.num());
    else
        os << '(' << to_string(r.num()) << ')';
    os << '/';
    if (is_plain_factor(r.den()))
        os << to_string(r.den());
    else
        os << '(' << to_string(r.den()) << ')';
    return os.str();
}

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind = End;
    std::string text;
    Rational value;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token &peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    bool take_op(char c) {
        if (tok_.kind == Token::Op && tok_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
            ++pos_;
        if (pos_ >= text_.size()) {
            tok_ = Token{};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
                ++pos_;
            tok_.kind = Token::Number;
            tok_.text = std::string(text_.substr(start, pos_ - start));
            tok_.value = Rational(Integer(tok_.text));
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Ident;
            tok_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::strchr("+-*/^()", c)) {
            tok_.kind = Token::Op;
            tok_.text = std::string(1, c);
            ++pos_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view text, const VarSetPtr &vars) : lex_(text), vars_(vars) {}

    RationalExpr run() {
        RationalExpr r = parse_sum();
        if (lex_.peek().kind != Token::End)
            throw ParseError("unexpected trailing input near '" + lex_.peek().text + "'");
        return r;
    }

private:
    RationalExpr parse_sum() {
        RationalExpr r = parse_product();
        for (;;) {
            if (lex_.take_op('+'))
                r += parse_product();
            else if (lex_.take_op('-'))
                r -= parse_product();
            else
                return r;
        }
    }

    RationalExpr parse_product() {
        RationalExpr r = parse_unary();
        for (;;) {
            if (lex_.take_op('*'))
                r *= parse_unary();
            else if (lex_.take_op('/'))
                r /= parse_unary();
            else
                return r;
        }
    }

    RationalExpr parse_unary() {
        bool negate = false;
        while (true) {
            if (lex_.take_op('-'))
                negate = !negate;
            else if (lex_.take_op('+'))
                ;
            else
                break;
        }
        RationalExpr r = parse_power();
        return negate ? -r : r;
    }

    RationalExpr parse_power() {
        RationalExpr base = parse_atom();
        if (!lex_.take_op('^'))
            return base;
        return base.pow(parse_exponent());
    }

    int parse_exponent() {
        bool neg = false;
        bool parens = lex_.take_op('(');
        if (lex_.take_op('-'))
            neg = true;
        Token t = lex_.take();
        if (t.kind != Token::Number)
            throw ParseError("exponent must be an integer literal");
        if (parens && !lex_.take_op(')'))
            throw ParseError("missing ')' after exponent");
        Integer e = numerator(t.value);
        if (e > 64)
            throw ParseError("exponent too large");
        int v = (int)e;
        return neg ? -v : v;
    }

    RationalExpr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Number:
            return RationalExpr::constant(vars_, t.value);
        case Token::Ident: {
            if (!vars_->find(t.text)) {
                std::ostringstream msg;
                msg << "unknown symbol '" << t.text << "' (expected one of:";
                for (const auto &n : vars_->names())
                    msg << ' ' << n;
                msg << ')';
                throw ParseError(msg.str());
            }
            return RationalExpr::variable(vars_, t.text);
        }
        case Token::Op:
            if (t.text == "(") {
                RationalExpr r = parse_sum();
                if (!lex_.take_op(')'))
                    throw ParseError("missing closing parenthesis");
                return r;
            }
            throw ParseError("unexpected '" + t.text + "' in expression");
        case Token::End:
            break;
        }
        throw ParseError("unexpected end of expression");
    }

    Lexer lex_;
    VarSetPtr vars_;
};

} // namespace

RationalExpr parse_expr(std::string_view text, const VarSetPtr &vars) {
    return Parser(text, vars).run();
}

} // namespace hornred
