#include "hornred/inverse_table.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

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

std::string lower_copy(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct TableParser {
    std::vector<InverseEntry> entries;
    int lineno = 0;

    // State of the explicit block under construction.
    bool open = false;
    InverseEntry cur;
    const HornDefinition *cur_def = nullptr;
    bool seen_coeff[4] = {false, false, false, false};

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError("inverse operator table line " + std::to_string(lineno) + ": " + msg);
    }

    const InverseEntry *find_entry(const std::string &function, const std::string &parameter) const {
        for (const auto &e : entries)
            if (e.function == function && e.parameter == parameter)
                return &e;
        return nullptr;
    }

    const HornDefinition &definition_of(const std::string &name) const {
        try {
            return get_definition(name);
        } catch (const UnknownFunctionError &) {
            fail("unknown function '" + name + "'");
        }
    }

    void check_parameter(const HornDefinition &def, const std::string &param) const {
        if (std::find(def.params.begin(), def.params.end(), param) == def.params.end())
            fail("'" + param + "' is not a parameter of " + def.name);
    }

    void push_entry(const HornDefinition &def, InverseEntry entry) {
        if (find_entry(entry.function, entry.parameter))
            fail("duplicate entry for " + entry.function + " " + entry.parameter);
        if (def.holonomic_rank == 3 && !entry.op.c12.is_zero())
            fail(def.name + " has rank 3, so the mixed coefficient of the " +
                 entry.parameter + " entry must vanish");
        entries.push_back(std::move(entry));
    }

    // inverse <function> <parameter> from <parameter2> [zswap] [p <x> <y>]...
    void derive(const HornDefinition &def, const std::vector<std::string> &words) {
        if (words.size() < 5)
            fail("expected 'inverse <function> <parameter> from <parameter2> ...'");
        const std::string &param = words[2];
        const std::string &base_param = words[4];
        check_parameter(def, base_param);
        const InverseEntry *base = find_entry(def.name, base_param);
        if (!base)
            fail("no earlier entry for " + def.name + " " + base_param + " to derive from");

        bool zswap = false;
        std::map<std::string, RationalExpr> subs;
        for (std::size_t i = 5; i < words.size();) {
            if (words[i] == "zswap") {
                zswap = true;
                ++i;
            } else if (words[i] == "p" && i + 2 < words.size()) {
                const std::string &x = words[i + 1];
                const std::string &y = words[i + 2];
                check_parameter(def, x);
                check_parameter(def, y);
                subs.insert_or_assign(x, RationalExpr::variable(def.ctx, y));
                subs.insert_or_assign(y, RationalExpr::variable(def.ctx, x));
                i += 3;
            } else {
                fail("unknown derivation token '" + words[i] + "'");
            }
        }
        if (zswap) {
            subs.insert_or_assign("z1", RationalExpr::variable(def.ctx, "z2"));
            subs.insert_or_assign("z2", RationalExpr::variable(def.ctx, "z1"));
        }

        InverseEntry entry;
        entry.function = def.name;
        entry.parameter = param;
        entry.op = ThetaOperator{base->op.c0.substitute(subs), base->op.c1.substitute(subs),
                                 base->op.c2.substitute(subs), base->op.c12.substitute(subs)};
        // Exchanging z1 and z2 relabels the Euler operators with them, so the
        // theta1 and theta2 coefficients trade places.
        if (zswap)
            std::swap(entry.op.c1, entry.op.c2);
        push_entry(def, std::move(entry));
    }

    void begin(const std::vector<std::string> &words) {
        if (open)
            fail("entry for " + cur.function + " " + cur.parameter + " is missing its 'end'");
        if (words.size() < 3)
            fail("expected 'inverse <function> <parameter>'");
        const HornDefinition &def = definition_of(words[1]);
        check_parameter(def, words[2]);

        if (words.size() > 3) {
            if (words[3] != "from")
                fail("unexpected token '" + words[3] + "' after the parameter name");
            derive(def, words);
            return;
        }

        cur = InverseEntry{def.name, words[2], ThetaOperator::zero(def.ctx)};
        cur_def = &def;
        std::fill(std::begin(seen_coeff), std::end(seen_coeff), false);
        open = true;
    }

    void coefficient(const std::string &line, const std::string &head) {
        static const std::map<std::string, int> slots = {{"A", 0}, {"B", 1}, {"C", 2}, {"D", 3}};
        const int k = slots.at(head);
        if (seen_coeff[k])
            fail("coefficient " + head + " given twice");
        seen_coeff[k] = true;

        const auto colon = line.find(':');
        if (colon == std::string::npos)
            fail("expected '" + head + " : <expression>'");
        const std::string text = trim(line.substr(colon + 1));
        try {
            cur.op.coeff(k) = parse_expr(text, cur_def->ctx);
        } catch (const ParseError &e) {
            fail(e.what());
        }
    }

    void handle(const std::string &raw) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            return;
        std::vector<std::string> words = split_words(line);
        const std::string &head = words[0];

        if (head == "inverse") {
            begin(words);
            return;
        }
        if (!open)
            fail("directive '" + head + "' outside an entry");

        if (head == "end") {
            push_entry(*cur_def, std::move(cur));
            open = false;
            cur_def = nullptr;
        } else if (head == "A" || head == "B" || head == "C" || head == "D") {
            coefficient(line, head);
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
            fail("entry for " + cur.function + " " + cur.parameter + " is missing its 'end'");
    }
};

} // namespace

const std::vector<InverseEntry> &inverse_table() {
    static const std::vector<InverseEntry> entries = [] {
        TableParser parser;
        parser.run(detail::inverse_operator_text());
        return std::move(parser.entries);
    }();
    return entries;
}

const ThetaOperator *find_inverse(std::string_view function, std::string_view parameter) {
    const std::string wanted = lower_copy(function);
    for (const auto &e : inverse_table())
        if (lower_copy(e.function) == wanted && e.parameter == parameter)
            return &e.op;
    return nullptr;
}

} // namespace hornred
