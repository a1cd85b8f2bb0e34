#pragma once

#include "locus/groebner.hpp"

#include <optional>

namespace locus {

struct ZeroDimSolution {
    // Full coordinate tuples in context order, sorted lexicographically.
    std::vector<std::vector<Rational>> points;
    // Non-rational solution content, kept symbolically; never dropped.
    std::optional<Ideal> residual;
};

// All rational solutions of a zero-dimensional ideal via a triangular Lex
// basis, rational-root extraction (through the factorization kernel) and
// back-substitution. Throws InvalidArgument when the ideal is not
// zero-dimensional (Lex leading terms must contain a pure power of every
// variable).
ZeroDimSolution solve_zero_dim(const Ideal& ideal, const GroebnerOptions& opts = {});

} // namespace locus
