#pragma once

#include <iosfwd>
#include <string>

#include "wreath/complex.hpp"

namespace wreath {

/// Facet file format: UTF-8 text; a line starting with '#' is a comment;
/// every other non-blank line is one facet as whitespace-separated vertex
/// labels; the literal line "EMPTYFACET" denotes the empty facet.
///
/// In strict mode (prune = false) a facet contained in another one is
/// rejected with an error; with prune = true it is dropped and a warning is
/// appended to *warnings (when given).
SimplicialComplex read_complex(std::istream& in, bool prune = false,
                               std::string* warnings = nullptr);
SimplicialComplex read_complex_file(const std::string& path, bool prune = false,
                                    std::string* warnings = nullptr);

void write_complex(std::ostream& out, const SimplicialComplex& K);
void write_complex_file(const std::string& path, const SimplicialComplex& K);

}  // namespace wreath
