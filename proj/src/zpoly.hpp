#pragma once

// Internal dense integer/modular univariate polynomial layer backing the
// factorization pipeline. Not part of the public headers.

#include "locus/rational.hpp"

#include <vector>

namespace locus::detail {

// Dense coefficients, index = exponent. Empty vector is zero; the top
// coefficient of a nonzero polynomial is nonzero.
using ZPoly = std::vector<Integer>;

int zdeg(const ZPoly& f);
void znorm(ZPoly& f);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zscale(const ZPoly& a, const Integer& c);
Integer zcontent(const ZPoly& f);
ZPoly zprimitive(const ZPoly& f); // positive leading coefficient
ZPoly zderiv(const ZPoly& f);
// Quotient of exact division, or false when the division has a remainder.
bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

// Irreducible factors of a squarefree primitive f with deg f >= 1, each
// primitive with positive leading coefficient; the product equals f.
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f);

} // namespace locus::detail
