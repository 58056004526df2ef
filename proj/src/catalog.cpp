#include "hornred/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "hornred/embedded_data.hpp"
#include "hornred/errors.hpp"
#include "hornred/expr_io.hpp"

namespace hornred {

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split_words(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> words;
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

std::vector<std::string> split_on(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

std::string lower_copy(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Parse an expression that must come out as a plain polynomial.
Polynomial parse_poly(const std::string &text, const VarSetPtr &vars, int lineno) {
    RationalExpr r = parse_expr(text, vars);
    if (!r.den().is_one())
        throw ParseError("function catalog line " + std::to_string(lineno) +
                         ": expected a polynomial, got '" + text + "'");
    return r.num();
}

struct CatalogParser {
    std::vector<HornDefinition> defs;
    int lineno = 0;

    // State of the block under construction.
    bool open = false;
    HornDefinition cur;
    std::vector<std::string> exceptional_texts;
    std::vector<std::string> locus_texts;
    std::vector<std::pair<std::string, std::string>> relation_texts;

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError("function catalog line " + std::to_string(lineno) + ": " + msg);
    }

    void begin(const std::vector<std::string> &words) {
        if (open)
            fail("nested function block");
        if (words.size() != 2)
            fail("expected 'function <name>'");
        cur = HornDefinition{};
        cur.name = words[1];
        exceptional_texts.clear();
        locus_texts.clear();
        relation_texts.clear();
        open = true;
    }

    void finish() {
        if (cur.params.empty())
            fail("function '" + cur.name + "' lists no parameters");

        std::vector<std::string> names = cur.params;
        names.push_back("z1");
        names.push_back("z2");
        cur.ctx = VarSet::make(names);

        const VarSetPtr pvars = VarSet::make(cur.params);
        for (const auto &t : exceptional_texts)
            cur.exceptional.push_back(parse_poly(t, pvars, lineno));
        const VarSetPtr zvars = VarSet::make({"z1", "z2"});
        for (const auto &t : locus_texts)
            cur.singular_locus.push_back(parse_poly(t, zvars, lineno));

        if (!relation_texts.empty()) {
            ExtraRelation rel{RationalExpr::constant(cur.ctx, 0), RationalExpr::constant(cur.ctx, 0),
                              RationalExpr::constant(cur.ctx, 0), RationalExpr::constant(cur.ctx, 0),
                              RationalExpr::constant(cur.ctx, 0), RationalExpr::constant(cur.ctx, 0)};
            for (const auto &[key, text] : relation_texts) {
                RationalExpr value = parse_expr(text, cur.ctx);
                if (key == "1")
                    rel.c1 = value;
                else if (key == "theta1")
                    rel.ct1 = value;
                else if (key == "theta2")
                    rel.ct2 = value;
                else if (key == "theta11")
                    rel.ct11 = value;
                else if (key == "theta22")
                    rel.ct22 = value;
                else if (key == "theta12")
                    rel.ct12 = value;
                else
                    fail("unknown relation coefficient '" + key + "'");
            }
            cur.extra = std::move(rel);
        }

        if ((cur.holonomic_rank == 3) != cur.extra.has_value())
            fail("function '" + cur.name +
                 "': an extra relation must be present exactly for rank 3");

        // Every parameter must be carried by exactly one Pochhammer factor.
        std::set<std::string> seen;
        for (const auto &f : cur.factors) {
            if (std::find(cur.params.begin(), cur.params.end(), f.param) == cur.params.end())
                fail("factor parameter '" + f.param + "' is not in the parameter list");
            if (!seen.insert(f.param).second)
                fail("parameter '" + f.param + "' appears in two factors");
            if (f.mu1 == 0 && f.mu2 == 0)
                fail("factor for '" + f.param + "' has zero index weights");
        }
        if (seen.size() != cur.params.size())
            fail("function '" + cur.name + "': some parameter has no factor");

        defs.push_back(std::move(cur));
        open = false;
    }

    void factor(const std::vector<std::string> &words, FactorRole role) {
        // upper <param> : <mu1> <mu2>
        if (words.size() != 5 || words[2] != ":")
            fail("expected '" + words[0] + " <param> : <mu1> <mu2>'");
        PochhammerFactor f;
        f.param = words[1];
        f.role = role;
        try {
            f.mu1 = std::stoi(words[3]);
            f.mu2 = std::stoi(words[4]);
        } catch (const std::exception &) {
            fail("index weights must be integers");
        }
        cur.factors.push_back(std::move(f));
    }

    void handle(const std::string &raw) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            return;
        std::vector<std::string> words = split_words(line);
        const std::string &head = words[0];

        if (head == "function") {
            begin(words);
            return;
        }
        if (!open)
            fail("directive '" + head + "' outside a function block");

        if (head == "end") {
            finish();
        } else if (head == "params") {
            cur.params.assign(words.begin() + 1, words.end());
        } else if (head == "upper") {
            factor(words, FactorRole::Upper);
        } else if (head == "lower") {
            factor(words, FactorRole::Lower);
        } else if (head == "rank") {
            if (words.size() != 2 || (words[1] != "3" && words[1] != "4"))
                fail("expected 'rank 3' or 'rank 4'");
            cur.holonomic_rank = words[1] == "3" ? 3 : 4;
        } else if (head == "exceptional") {
            for (auto &part : split_on(line.substr(head.size()), ';'))
                if (!part.empty())
                    exceptional_texts.push_back(part);
        } else if (head == "locus") {
            for (auto &part : split_on(line.substr(head.size()), ';'))
                if (!part.empty())
                    locus_texts.push_back(part);
        } else if (head == "relation") {
            // relation <key> : <expression>
            std::string rest = trim(line.substr(head.size()));
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                fail("expected 'relation <key> : <expression>'");
            relation_texts.emplace_back(trim(rest.substr(0, colon)),
                                        trim(rest.substr(colon + 1)));
        } else if (head == "note") {
            cur.notes.push_back(trim(line.substr(head.size())));
        } else {
            fail("unknown directive '" + head + "'");
        }
    }

    void run(const char *text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            handle(line);
        }
        if (open)
            fail("unterminated function block '" + cur.name + "'");
    }
};

} // namespace

const std::vector<HornDefinition> &catalog() {
    static const std::vector<HornDefinition> defs = [] {
        CatalogParser parser;
        parser.run(detail::catalog_text());
        return std::move(parser.defs);
    }();
    return defs;
}

std::vector<std::string> list_functions() {
    std::vector<std::string> names;
    names.reserve(catalog().size());
    for (const auto &def : catalog())
        names.push_back(def.name);
    return names;
}

const HornDefinition &get_definition(std::string_view name) {
    const std::string wanted = lower_copy(name);
    for (const auto &def : catalog())
        if (lower_copy(def.name) == wanted)
            return def;
    throw UnknownFunctionError("unknown function '" + std::string(name) + "'",
                               list_functions());
}

const PochhammerFactor *HornDefinition::find_factor(std::string_view param) const {
    for (const auto &f : factors)
        if (f.param == param)
            return &f;
    return nullptr;
}

std::vector<std::string> exceptional_check(const HornDefinition &def,
                                           const std::vector<Rational> &values) {
    if (values.size() != def.params.size())
        throw DomainError("exceptional_check: expected " +
                          std::to_string(def.params.size()) + " parameter values for " +
                          def.name + ", got " + std::to_string(values.size()));
    std::vector<std::string> triggered;
    for (const auto &form : def.exceptional) {
        const Rational v = form.eval(values);
        if (denominator(v) == 1)
            triggered.push_back(to_string(form) + " = " + v.str());
    }
    return triggered;
}

} // namespace hornred
