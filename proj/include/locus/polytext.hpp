#pragma once

#include "locus/polynomial.hpp"

#include <string>

namespace locus {

// Parses the canonical polynomial text form (plus parentheses and unary
// signs, so hand-written expressions work too). Variables must exist in the
// context. Throws ParseError.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx);

} // namespace locus
