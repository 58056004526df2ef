#pragma once

// Access to the data tables that are compiled into the library.  The build
// embeds the text files under data/ verbatim; see src/embedded_data.cpp.in.

namespace hornred::detail {

// Contents of data/function_catalog.txt.
const char *catalog_text();

// Contents of data/inverse_operators.txt.
const char *inverse_operator_text();

} // namespace hornred::detail
