// Command-line front end: list and describe the catalogued functions, reduce
// parameter shifts to differential-operator quadruples, evaluate the double
// series, and cross-check reductions numerically.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hornred/annihilator.hpp"
#include "hornred/catalog.hpp"
#include "hornred/errors.hpp"
#include "hornred/expr_io.hpp"
#include "hornred/reduction.hpp"
#include "hornred/series.hpp"

namespace {

using namespace hornred;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_exceptional = 3;
constexpr int exit_unknown = 4;
constexpr int exit_tolerance = 5;

int output_digits() {
    if (const char *env = std::getenv("HORNRED_DIGITS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 6 && v <= 80)
            return static_cast<int>(v);
    }
    return 30;
}

std::string render(const Real &x) {
    std::ostringstream out;
    out << std::setprecision(output_digits()) << x;
    return out.str();
}

std::string render(const Rational &x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(item);
    if (!text.empty() && text.back() == ',')
        out.push_back("");
    return out;
}

bool all_of_charset(const std::string &text, const char *set) {
    return !text.empty() && text.find_first_not_of(set) == std::string::npos;
}

// Accepts integers, fractions p/q, and decimal literals, all exactly.
Rational parse_rational(const std::string &text) {
    const auto bad = [&]() -> ParseError {
        return ParseError("'" + text + "' is not an integer, fraction, or decimal");
    };
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    Rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_of_charset(num, "0123456789") || !all_of_charset(den, "0123456789"))
            throw bad();
        if (Integer(den) == 0)
            throw ParseError("'" + text + "' divides by zero");
        value = Rational(Integer(num), Integer(den));
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        const std::string digits = body.substr(0, dot) + body.substr(dot + 1);
        if (!all_of_charset(digits, "0123456789"))
            throw bad();
        Integer den = 1;
        for (std::size_t k = dot + 1; k < body.size(); ++k)
            den *= 10;
        value = Rational(Integer(digits), den);
    } else {
        if (!all_of_charset(body, "0123456789"))
            throw bad();
        value = Rational(Integer(body));
    }
    return negative ? Rational(-value) : value;
}

ShiftVector parse_shift(const HornDefinition &def, const std::string &text) {
    ShiftVector shift;
    for (const std::string &item : split_list(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw ParseError("'" + item + "' is not an integer shift");
        }
        if (used != item.size())
            throw ParseError("'" + item + "' is not an integer shift");
        shift.push_back(v);
    }
    if (shift.size() != def.params.size())
        throw ParseError(def.name + " takes " + std::to_string(def.params.size()) +
                         " shift entries, got " + std::to_string(shift.size()));
    return shift;
}

std::vector<Rational> parse_values(const HornDefinition &def, const std::string &text) {
    std::vector<Rational> values;
    for (const std::string &item : split_list(text))
        values.push_back(parse_rational(item));
    if (values.size() != def.params.size())
        throw ParseError(def.name + " takes " + std::to_string(def.params.size()) +
                         " parameter values, got " + std::to_string(values.size()));
    return values;
}

bool looks_numeric(const std::string &text) {
    for (const std::string &item : split_list(text))
        if (!all_of_charset(item, "+-0123456789./"))
            return false;
    return true;
}

std::pair<Rational, Rational> parse_z(const std::string &text) {
    const auto items = split_list(text);
    if (items.size() != 2)
        throw ParseError("expected two comma-separated values for z, got '" + text + "'");
    return {parse_rational(items[0]), parse_rational(items[1])};
}

// ---------------------------------------------------------------------------
// Renderings shared by describe.

std::string linear_index(int mu1, int mu2) {
    std::string out;
    const auto add = [&](int mu, const char *var) {
        if (mu == 0)
            return;
        if (mu < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (std::abs(mu) != 1)
            out += std::to_string(std::abs(mu)) + "*";
        out += var;
    };
    add(mu1, "n1");
    add(mu2, "n2");
    return out.empty() ? "0" : out;
}

std::string factor_text(const PochhammerFactor &f) {
    return "(" + f.param + ")_{" + linear_index(f.mu1, f.mu2) + "}";
}

std::string series_text(const HornDefinition &def) {
    std::string num, den;
    for (const PochhammerFactor &f : def.factors) {
        std::string &side = f.role == FactorRole::Upper ? num : den;
        if (!side.empty())
            side += " * ";
        side += factor_text(f);
    }
    if (num.empty())
        num = "1";
    if (!den.empty())
        den += " * ";
    den += "n1! * n2!";
    return num + " / ( " + den + " )";
}

std::string term(const RationalExpr &coeff, const char *word) {
    if (coeff.is_zero())
        return "";
    std::string out = "(" + to_string(coeff) + ")";
    if (*word)
        out += std::string("*") + word;
    return out;
}

std::string basis_combination(const std::vector<std::string> &terms) {
    std::string out;
    for (const std::string &t : terms) {
        if (t.empty())
            continue;
        if (!out.empty())
            out += " + ";
        out += t;
    }
    return out.empty() ? "0" : out;
}

std::string operator_line(const ThetaOperator &op) {
    return basis_combination({term(op.c0, ""), term(op.c1, "theta1"), term(op.c2, "theta2"),
                              term(op.c12, "theta1*theta2")});
}

std::string relation_line(const ExtraRelation &r) {
    return "0 = " + basis_combination({term(r.c1, ""), term(r.ct1, "theta1"),
                                       term(r.ct2, "theta2"), term(r.ct11, "theta1^2"),
                                       term(r.ct22, "theta2^2"),
                                       term(r.ct12, "theta1*theta2")});
}

// ---------------------------------------------------------------------------
// Subcommands.

int run_list(const std::string &format) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const HornDefinition &def : catalog()) {
            nlohmann::json row;
            row["name"] = def.name;
            row["params"] = def.params;
            row["rank"] = def.holonomic_rank;
            rows.push_back(row);
        }
        std::cout << rows.dump(2) << "\n";
        return exit_ok;
    }
    for (const HornDefinition &def : catalog()) {
        std::string params;
        for (const std::string &p : def.params)
            params += (params.empty() ? "" : ",") + p;
        std::cout << std::left << std::setw(8) << def.name << std::setw(18) << params
                  << "rank " << def.holonomic_rank << "\n";
    }
    return exit_ok;
}

int run_describe(const HornDefinition &def, const std::string &format) {
    const RewriteRules rules = derive_rules(def);

    std::vector<std::string> exceptional;
    for (const Polynomial &p : def.exceptional)
        exceptional.push_back(to_string(p));
    std::vector<std::string> locus = {"z1 = 0", "z2 = 0"};
    for (const Polynomial &p : def.singular_locus)
        locus.push_back(to_string(p) + " = 0");

    std::vector<std::pair<std::string, std::string>> rewrites = {
        {"theta1^2", operator_line(rules.r11)}, {"theta2^2", operator_line(rules.r22)}};
    if (def.holonomic_rank == 3)
        rewrites.emplace_back("theta1*theta2", operator_line(rules.r12));
    else {
        rewrites.emplace_back("theta1^2*theta2", operator_line(rules.w112));
        rewrites.emplace_back("theta1*theta2^2", operator_line(rules.w122));
    }

    if (format == "json") {
        nlohmann::json j;
        j["name"] = def.name;
        j["params"] = def.params;
        j["rank"] = def.holonomic_rank;
        j["series"] = series_text(def);
        j["exceptional"] = exceptional;
        j["singular_locus"] = locus;
        nlohmann::json rw;
        for (const auto &[word, line] : rewrites)
            rw[word] = line;
        j["rewrite_rules"] = rw;
        if (def.extra)
            j["extra_relation"] = relation_line(*def.extra);
        j["notes"] = def.notes;
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }

    std::cout << "function:    " << def.name << "\n";
    std::cout << "parameters: ";
    for (const std::string &p : def.params)
        std::cout << " " << p;
    std::cout << "\n";
    std::cout << "rank:        " << def.holonomic_rank << "\n";
    std::cout << "series:      sum over n1,n2 >= 0 of " << series_text(def)
              << " * z1^n1 * z2^n2\n";
    std::cout << "exceptional: ";
    for (std::size_t i = 0; i < exceptional.size(); ++i)
        std::cout << (i ? " ; " : "") << exceptional[i];
    std::cout << "\n";
    std::cout << "singular:    ";
    for (std::size_t i = 0; i < locus.size(); ++i)
        std::cout << (i ? " ; " : "") << locus[i];
    std::cout << "\n";
    for (const auto &[word, line] : rewrites)
        std::cout << "rewrite:     " << word << " = " << line << "\n";
    if (def.extra)
        std::cout << "relation:    " << relation_line(*def.extra) << "\n";
    for (const std::string &note : def.notes)
        std::cout << "note:        " << note << "\n";
    return exit_ok;
}

int run_reduce(const HornDefinition &def, const std::string &shift_text,
               const std::string &params_text, const std::string &format) {
    const ShiftVector shift = parse_shift(def, shift_text);

    ReductionResult result;
    if (params_text.empty()) {
        result = reduce(def, shift);
    } else if (looks_numeric(params_text)) {
        result = reduce(def, shift, parse_values(def, params_text));
    } else {
        const auto names = split_list(params_text);
        if (std::vector<std::string>(names.begin(), names.end()) != def.params) {
            std::string expected;
            for (const std::string &p : def.params)
                expected += (expected.empty() ? "" : ",") + p;
            throw ParseError("symbolic parameters for " + def.name + " must be '" +
                             expected + "', got '" + params_text + "'");
        }
        result = reduce(def, shift);
    }

    if (format == "json")
        std::cout << to_json(result) << "\n";
    else if (format == "cas")
        std::cout << to_cas(result);
    else
        std::cout << to_text(result) << "\n";
    return exit_ok;
}

int run_eval(const HornDefinition &def, const std::string &params_text,
             const std::string &z_text, int order, const std::string &format) {
    const std::vector<Rational> values = parse_values(def, params_text);
    const auto [z1, z2] = parse_z(z_text);
    const SeriesValue sv = eval_series(def, values, z1, z2, order);

    if (format == "json") {
        nlohmann::json j;
        j["function"] = def.name;
        std::vector<std::string> rendered;
        for (const Rational &v : values)
            rendered.push_back(render(v));
        j["params"] = rendered;
        j["z"] = {render(z1), render(z2)};
        j["N"] = order;
        j["value"] = render(sv.value());
        j["theta1"] = render(sv.theta(1, 0));
        j["theta2"] = render(sv.theta(0, 1));
        j["theta12"] = render(sv.theta(1, 1));
        j["tail_bound"] = render(sv.tail_bound);
        j["converged"] = sv.converged;
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }

    std::cout << "value      = " << render(sv.value()) << "\n";
    std::cout << "theta1     = " << render(sv.theta(1, 0)) << "\n";
    std::cout << "theta2     = " << render(sv.theta(0, 1)) << "\n";
    std::cout << "theta12    = " << render(sv.theta(1, 1)) << "\n";
    std::cout << "tail bound = " << render(sv.tail_bound) << "\n";
    std::cout << "converged  = " << (sv.converged ? "yes" : "no") << "\n";
    return exit_ok;
}

int run_verify(const HornDefinition &def, const std::string &shift_text,
               const std::string &params_text, const std::string &z_text, int points,
               unsigned seed, int order, const std::string &tol_text,
               const std::string &format) {
    const ShiftVector shift = parse_shift(def, shift_text);
    const Real tol(tol_text);

    std::vector<SamplePoint> samples;
    if (!params_text.empty() && !looks_numeric(params_text))
        throw ParseError("verify needs numeric parameter values, got '" + params_text + "'");
    if (!z_text.empty()) {
        SamplePoint point;
        point.params = params_text.empty() ? sample_points(def, 1, seed)[0].params
                                           : parse_values(def, params_text);
        std::tie(point.z1, point.z2) = parse_z(z_text);
        samples.push_back(point);
    } else {
        samples = sample_points(def, points, seed);
        if (!params_text.empty()) {
            const std::vector<Rational> values = parse_values(def, params_text);
            for (SamplePoint &s : samples)
                s.params = values;
        }
    }

    nlohmann::json rows = nlohmann::json::array();
    int conclusive = 0, failed = 0;
    Real worst(0);
    if (format != "json")
        std::cout << def.name << " shift " << shift_text << ", N = " << order
                  << ", tol = " << tol_text << "\n";
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const SamplePoint &point = samples[k];
        const ReductionResult result = reduce(def, shift, point.params);
        const VerificationReport report =
            verify_reduction(def, result, point.params, point.z1, point.z2, tol, order);

        std::string params;
        for (const Rational &v : point.params)
            params += (params.empty() ? "" : ",") + render(v);
        if (report.conclusive) {
            ++conclusive;
            if (!report.passed)
                ++failed;
            worst = std::max(worst, report.relative_error);
        }

        if (format == "json") {
            nlohmann::json row;
            row["params"] = params;
            row["z"] = {render(point.z1), render(point.z2)};
            row["conclusive"] = report.conclusive;
            row["passed"] = report.passed;
            row["relative_error"] = render(report.relative_error);
            rows.push_back(row);
        } else {
            std::cout << "point " << k + 1 << ": params = (" << params << "), z = ("
                      << render(point.z1) << ", " << render(point.z2) << "): ";
            if (!report.conclusive)
                std::cout << "inconclusive (series tail test failed)\n";
            else
                std::cout << "rel err = " << render(report.relative_error) << "  "
                          << (report.passed ? "ok" : "FAIL") << "\n";
        }
    }

    const bool passed = failed == 0;
    if (format == "json") {
        nlohmann::json j;
        j["function"] = def.name;
        j["shift"] = shift;
        j["N"] = order;
        j["tol"] = tol_text;
        j["points"] = rows;
        j["conclusive"] = conclusive;
        j["passed"] = passed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << conclusive << "/" << samples.size() << " points conclusive, "
                  << (conclusive - failed) << " passed";
        if (conclusive > 0)
            std::cout << ", worst error " << render(worst);
        std::cout << "\n";
    }
    return passed ? exit_ok : exit_tolerance;
}

// Comma-separated vectors may start with a negative entry ("-1,-1,0"), which
// an option parser would read as a flag; glue such values onto their option
// with '=' before parsing.
std::vector<std::string> preprocess_args(int argc, char **argv) {
    const std::vector<std::string> vector_options = {"--shift", "--params", "-z", "--z"};
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        const bool joinable = std::find(vector_options.begin(), vector_options.end(), arg) !=
                              vector_options.end();
        if (joinable && i + 1 < argc) {
            const std::string next = argv[i + 1];
            if (next.size() >= 2 && next[0] == '-' &&
                (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.')) {
                args.push_back(arg + "=" + next);
                ++i;
                continue;
            }
        }
        args.push_back(std::move(arg));
    }
    return args;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Differential reduction of two-variable Horn-type hypergeometric functions"};
    app.require_subcommand(1);

    std::string function, shift_text, params_text, z_text;
    std::string format = "text";
    int points = 3, order = 40;
    unsigned seed = 1;
    std::string tol_text = "1e-10";

    CLI::App *list = app.add_subcommand("list", "List the catalogued functions");
    list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App *describe =
        app.add_subcommand("describe", "Show the definition and operator data of a function");
    describe->add_option("function", function)->required();
    describe->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App *reduce_cmd =
        app.add_subcommand("reduce", "Express a function via one with integer-shifted parameters");
    reduce_cmd->add_option("function", function)->required();
    reduce_cmd->add_option("--shift", shift_text, "Comma-separated integer shifts")->required();
    reduce_cmd->add_option("--params", params_text,
                           "Parameter symbols (symbolic result) or rational values");
    reduce_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "cas"}));

    CLI::App *eval_cmd = app.add_subcommand("eval", "Evaluate the double series numerically");
    eval_cmd->add_option("function", function)->required();
    eval_cmd->add_option("--params", params_text, "Comma-separated rational parameter values")
        ->required();
    eval_cmd->add_option("-z,--z", z_text, "Evaluation point z1,z2")->required();
    eval_cmd->add_option("-N,--N", order, "Truncation order");
    eval_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App *verify =
        app.add_subcommand("verify", "Check a reduction against truncated series values");
    verify->add_option("function", function)->required();
    verify->add_option("--shift", shift_text, "Comma-separated integer shifts")->required();
    verify->add_option("--params", params_text, "Fixed rational parameter values");
    verify->add_option("-z,--z", z_text, "Fixed evaluation point z1,z2");
    verify->add_option("--points", points, "Number of sampled points");
    verify->add_option("--seed", seed, "Sampling seed");
    verify->add_option("-N,--N", order, "Truncation order");
    verify->add_option("--tol", tol_text, "Relative error tolerance");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> args = preprocess_args(argc, argv);
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (list->parsed())
            return run_list(format);
        const HornDefinition &def = get_definition(function);
        if (describe->parsed())
            return run_describe(def, format);
        if (reduce_cmd->parsed())
            return run_reduce(def, shift_text, params_text, format);
        if (eval_cmd->parsed())
            return run_eval(def, params_text, z_text, order, format);
        return run_verify(def, shift_text, params_text, z_text, points, seed, order, tol_text,
                          format);
    } catch (const UnknownFunctionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_unknown;
    } catch (const ExceptionalParameterError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_exceptional;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
