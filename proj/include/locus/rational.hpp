#pragma once

#include <gmpxx.h>

#include <string>

namespace locus {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (positive denominator, reduced fraction), which is exactly the Rational
// invariant this kernel needs.
using Integer = mpz_class;
using Rational = mpq_class;

// "3", "-7/2", "0.125", "-2.5e1" -> exact rational. Throws InvalidArgument
// on anything else. Decimal and exponent forms are converted exactly.
Rational rational_from_string(const std::string& text);

// Canonical text: "0", "-3", "7/2".
std::string rational_text(const Rational& value);

double rational_to_double(const Rational& value);

} // namespace locus
