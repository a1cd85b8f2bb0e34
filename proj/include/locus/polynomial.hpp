#pragma once

#include "locus/context.hpp"
#include "locus/monomial.hpp"
#include "locus/order.hpp"
#include "locus/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace locus {

// Sparse exact-rational multivariate polynomial over an ordered variable
// context. Terms are stored grevlex-descending; no zero coefficient is ever
// kept, so the zero polynomial has an empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialStoreLess>;

    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, const Rational& value);
    static Polynomial variable(const ContextPtr& ctx, int index);
    static Polynomial variable(const ContextPtr& ctx, const std::string& name);
    static Polynomial from_terms(ContextPtr ctx, TermMap terms);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value (0 for the zero polynomial); requires is_constant().
    Rational constant_value() const;

    std::uint64_t total_degree() const; // 0 for the zero polynomial
    std::uint32_t degree_in(int var) const;
    std::vector<int> support() const;
    bool uses_only(const std::vector<char>& allowed_mask) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    Polynomial operator*(const Rational& scalar) const;
    Polynomial operator+(const Rational& scalar) const;
    Polynomial operator-(const Rational& scalar) const;
    Polynomial pow(std::uint32_t exponent) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Term with the largest monomial under the given order; requires nonzero.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;

    Polynomial derivative(int var) const;
    Polynomial derivative(const std::string& name) const;

    // Exact substitution. Bound variables are replaced by the given value
    // (rational or polynomial over the same context); others are untouched.
    Polynomial substitute(const std::map<int, Rational>& bindings) const;
    Polynomial substitute(const std::map<int, Polynomial>& bindings) const;

    // Ring morphism into another context: every variable of this context is
    // mapped through `images` (one polynomial over the target context per
    // source variable).
    Polynomial transplant(const ContextPtr& target, const std::vector<Polynomial>& images) const;

    // Same polynomial over a context that contains all used variables by
    // name (roles must agree).
    Polynomial embed(const ContextPtr& target) const;

    // Positive rational c such that p/c has coprime integer coefficients.
    // Zero polynomial -> 1.
    Rational content() const;
    // p / content, sign-fixed so the lex-leading coefficient is positive.
    Polynomial primitive_part() const;
    // primitive_part plus the constant it removed (p == constant * primitive).
    std::pair<Rational, Polynomial> primitive_decompose() const;

    double evaluate_double(const std::vector<double>& point) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Canonical text form: terms grevlex-descending, `*` between factors,
    // `^` for exponents above one, e.g. "x^2 + y^2 - 4*y + 3".
    std::string to_text() const;

private:
    void add_term(const Monomial& mono, const Rational& coeff);

    ContextPtr ctx_;
    TermMap terms_;
};

Polynomial operator*(const Rational& scalar, const Polynomial& p);

// Quotient when the division is exact, nullopt otherwise.
std::optional<Polynomial> try_divide(const Polynomial& dividend, const Polynomial& divisor);

// Brings both operands over one merged context (by-name embedding).
void align_contexts(Polynomial& a, Polynomial& b);

// Collect p as a dense coefficient vector in `var` (index 0 = constant
// coefficient), each coefficient a polynomial free of `var`.
std::vector<Polynomial> coefficients_in(const Polynomial& p, int var);
Polynomial assemble_in(const ContextPtr& ctx, int var, const std::vector<Polynomial>& coeffs);

} // namespace locus
