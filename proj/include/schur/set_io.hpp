#pragma once

#include <iosfwd>
#include <string>

#include "schur/integer_set.hpp"

namespace schur {

// Set text format: either a header line "n=<N>" followed by one member per
// line, or plain member lines (ground size then defaults to the largest
// member). Blank lines and lines starting with '#' are ignored. The writer
// always emits the header form.
IntegerSet read_set(std::istream& in);
IntegerSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const IntegerSet& s);
void write_set_file(const std::string& path, const IntegerSet& s);

}  // namespace schur
