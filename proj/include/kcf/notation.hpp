#pragma once

// Text notation for Kronecker structures:
//
//   structure := term ('+' term)*
//   term      := 'J(' size ';' eig ')' | 'L(' size ')' | 'LT(' size ')'
//   eig       := 'inf' | 'e' digits
//
// Whitespace is ignored everywhere.

#include <string>
#include <string_view>

#include "kcf/structure.hpp"

namespace kcf {

// Throws ParseError (with position into `text` and the expected tokens) or
// Error(Errc::domain_error) for J(0;...).
KroneckerStructure parse_structure(std::string_view text);

// Jordan blocks first, then L, then LT, in stored order, joined by " + ".
std::string format_structure(const KroneckerStructure& k);

EigenvalueLabel parse_label(std::string_view text);

}  // namespace kcf
