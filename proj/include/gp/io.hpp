#pragma once

#include <string>

#include "gp/residual.hpp"

namespace gp {

// Text formats.  All files are UTF-8 and line oriented; '#' starts a
// comment and blank lines are ignored.
//
// Presentation:
//   vertices: 3
//   edges: 0-1, 1-2        (or just "edges:")
//   group 0: table [[0,1],[1,0]]
//   group 1: Z
//   ...
//
// Word: space-separated "v:e" tokens, e a signed integer exponent for Z
// vertices and an element index otherwise; the empty string is the
// identity.
//
// Map (an endomorphism of the presentation):
//   map 0: 1 -> "1:1 0:1 1:1", 2 -> "..."
//   map 1: gen -> "1:1"
//
// Witness: kind, class, escalation count, the source presentation, the
// per-vertex quotients, and the separated pair with its images.

Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

// Parses and validates a word against p.  Does not reduce.
Word parse_word(const Presentation& p, const std::string& text);
std::string format_word(const Word& w);
std::string format_word(const NormalForm& w);

VertexMapFamily parse_map_family(const Presentation& p,
                                 const std::string& text);
std::string format_map_family(const VertexMapFamily& f);

SeparationWitness parse_witness(const std::string& text);
std::string format_witness(const SeparationWitness& w);

std::string read_file(const std::string& path);

}  // namespace gp
