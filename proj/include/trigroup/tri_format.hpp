#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "trigroup/surface.hpp"

namespace trigroup {

// ".tri" text format:
//
//   triangles <n>
//   glue <t1> <s1> <t2> <s2>     (3n/2 lines, 0-based)
//
// '#' starts a comment; tokens are whitespace separated. Parsing only checks
// syntax; validate() checks the gluing itself.
RawGluing parse_tri(std::istream& in);
RawGluing parse_tri(std::string_view text);
RawGluing read_tri_file(const std::string& path);

std::string format_tri(const GluedTriangulation& tri);

}  // namespace trigroup
