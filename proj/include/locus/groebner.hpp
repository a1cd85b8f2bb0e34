#pragma once

#include "locus/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace locus {

struct GroebnerOptions {
    // Hard cap on division steps per basis computation; exceeded -> ResourceError.
    std::uint64_t max_steps = 1'000'000;
};

// Generator list over a shared context. The zero polynomial is stored only
// as the sole generator of the zero ideal.
struct Ideal {
    ContextPtr context;
    std::vector<Polynomial> generators;

    static Ideal make(ContextPtr ctx, std::vector<Polynomial> gens);
    static Ideal zero(ContextPtr ctx);

    bool is_zero_ideal() const;
    std::string to_text() const; // "{p1, p2, ...}"
};

// Reduced basis: every S-polynomial and input generator reduces to zero, no
// term of one element is divisible by the leading term of another, elements
// primitive with positive leading coefficient, sorted by leading monomial.
struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<Polynomial> basis;
};

// Remainder of multivariate division of p by the divisor sequence.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order, const GroebnerOptions& opts = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

// I intersected with the subring in the kept variables, via a Block
// elimination order. Returns the zero ideal when the intersection is trivial.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<int>& keep,
                        const GroebnerOptions& opts = {});

bool is_member(const Polynomial& p, const Ideal& ideal, const GroebnerOptions& opts = {});
bool is_trivial(const Ideal& ideal, const GroebnerOptions& opts = {});

struct SaturationResult {
    Ideal ideal;            // original generators plus t*z - 1 over the extended context
    std::string slack_name; // "z", or the renamed variant on collision
    bool renamed = false;
};

// Rabinowitsch extension inverting t.
SaturationResult rabinowitsch_saturate(const Ideal& ideal, const Polynomial& t);

// Same generators over the sub-context of the selected variables; every
// generator must live in that subring already.
Ideal restrict_to_variables(const Ideal& ideal, const std::vector<int>& keep);

} // namespace locus
