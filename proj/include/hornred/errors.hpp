#ifndef HORNRED_ERRORS_HPP
#define HORNRED_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hornred {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed expression text or data-file records.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally invalid request: mismatched variable contexts, bad axis index,
// unknown parameter name, shift vector of the wrong length, and the like.
class DomainError : public Error {
public:
    using Error::Error;
};

// A value could not be computed: division by an expression that is
// identically zero, a vanishing denominator at a numeric point, or a
// Pochhammer pole.
class EvaluationError : public Error {
public:
    using Error::Error;
};

// Lookup of a function name that is not in the catalog.  Carries the list of
// valid names so callers can show it.
class UnknownFunctionError : public Error {
public:
    UnknownFunctionError(const std::string &msg, std::vector<std::string> names)
        : Error(msg), valid_names(std::move(names)) {}
    std::vector<std::string> valid_names;
};

// Parameter values on which the reduction operators degenerate.  Carries the
// linear forms (rendered as text) that evaluated to integers.
class ExceptionalParameterError : public Error {
public:
    ExceptionalParameterError(const std::string &msg, std::vector<std::string> forms)
        : Error(msg), triggered_forms(std::move(forms)) {}
    std::vector<std::string> triggered_forms;
};

// A linear system that was expected to be solvable turned out singular.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

} // namespace hornred

#endif
