#pragma once

#include "locus/polynomial.hpp"

#include <vector>

namespace locus {

// A gcd of the two inputs, primitive with positive leading coefficient
// under lex. gcd(p, 0) is the normalization of p; the gcd of coprime or
// constant inputs is 1.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

struct FactorUnit {
    Polynomial factor;
    int multiplicity = 1;
};

// constant * prod(factors[i].factor ^ factors[i].multiplicity) reconstructs
// the decomposed polynomial exactly.
struct Factorization {
    Rational constant{1};
    std::vector<FactorUnit> factors;

    Polynomial reconstruct(const ContextPtr& ctx) const;
};

// Square-free decomposition (Yun): factors pairwise coprime, square-free,
// primitive, ordered by multiplicity. Throws InvalidArgument on zero input.
Factorization squarefree_decompose(const Polynomial& p);

// Factorization into irreducibles over the rationals. Multivariate input is
// reduced to one variable by Kronecker substitution; univariate
// factorization runs modular factorization + Hensel lifting + subset
// recombination, and every candidate is verified by exact trial division.
// Factors are primitive with positive lex-leading coefficient, ordered by
// total degree (descending) then canonical term order. Throws
// InvalidArgument on zero or constant input.
Factorization factor(const Polynomial& p);

// Deterministic order used for reported factor lists.
bool factor_canonical_less(const Polynomial& a, const Polynomial& b);

} // namespace locus
