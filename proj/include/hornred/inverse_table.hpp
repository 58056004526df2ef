#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hornred/catalog.hpp"
#include "hornred/theta_algebra.hpp"

namespace hornred {

// One tabulated inverse step operator.  For an upper parameter p the operator
// satisfies F(.., p, ..) = T F(.., p+1, ..); for a lower parameter p it
// satisfies F(.., p, ..) = T F(.., p-1, ..).  Coefficients are written at the
// unshifted parameter symbols over the function's context, exactly like the
// step operators in theta_algebra.hpp, so composing T with the matching step
// gives the identity in the reduced algebra.
struct InverseEntry {
    std::string function;
    std::string parameter;
    ThetaOperator op;
};

// The whole table, in file order, parsed once from the embedded text.  Throws
// ParseError on a malformed record, DomainError on a record that contradicts
// the catalog (unknown parameter, mixed-term coefficient on a rank-3
// function, duplicate pair).
const std::vector<InverseEntry> &inverse_table();

// Lookup by function name (case-insensitive, as in get_definition) and exact
// parameter name.  Returns nullptr when the table carries no closed form for
// the pair; invert() can always recompute the operator from scratch.
const ThetaOperator *find_inverse(std::string_view function, std::string_view parameter);

} // namespace hornred
