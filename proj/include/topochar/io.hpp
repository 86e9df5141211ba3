#pragma once

#include <iosfwd>
#include <string>

#include "topochar/complex.hpp"

namespace topochar {

/**
 * Reads a complex from text.
 *
 * Facet format: one facet per line, vertex ids as base-10 integers separated
 * by whitespace; the complex is the closure of the facets. Edge-list format:
 * first line `graph`, then one `u v` pair per line (a lone `v` declares an
 * isolated vertex); the complex is the Whitney complex. In both formats
 * blank lines and lines starting with `#` are skipped.
 *
 * Throws InputError naming the offending line.
 */
Complex parse_complex(std::istream& in);
Complex parse_complex(const std::string& text);

/// parse_complex on a file; InputError if it cannot be opened.
Complex read_complex(const std::string& path);

/// Facets in canonical order, one per line, vertices separated by one space.
void write_facets(std::ostream& out, const Complex& g);
std::string facets_text(const Complex& g);

}  // namespace topochar
