#include "locus/polynomial.hpp"

#include "locus/errors.hpp"

#include <algorithm>
#include <sstream>

namespace locus {

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& value) {
    Polynomial p(std::move(ctx));
    if (value != 0) p.terms_.emplace(Monomial(p.ctx_ ? p.ctx_->size() : 0), value);
    return p;
}

Polynomial Polynomial::variable(const ContextPtr& ctx, int index) {
    if (!ctx || index < 0 || static_cast<std::size_t>(index) >= ctx->size())
        throw InvalidArgument("variable index out of range");
    Polynomial p(ctx);
    Monomial m(ctx->size());
    m[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::variable(const ContextPtr& ctx, const std::string& name) {
    int i = ctx ? ctx->index_of(name) : -1;
    if (i < 0) throw InvalidArgument("unknown variable: " + name);
    return variable(ctx, i);
}

Polynomial Polynomial::from_terms(ContextPtr ctx, TermMap terms) {
    Polynomial p(std::move(ctx));
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != (p.ctx_ ? p.ctx_->size() : 0))
            throw InvalidArgument("monomial size does not match context");
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_one();
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw InvalidArgument("polynomial is not constant");
    return terms_.begin()->second;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t Polynomial::degree_in(int var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
    return d;
}

std::vector<int> Polynomial::support() const {
    std::vector<int> out;
    if (!ctx_) return out;
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        for (const auto& [m, c] : terms_) {
            if (m[i]) {
                out.push_back(static_cast<int>(i));
                break;
            }
        }
    }
    return out;
}

bool Polynomial::uses_only(const std::vector<char>& allowed_mask) const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] && !allowed_mask[i]) return false;
    return true;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial a = *this, b = other;
    align_contexts(a, b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial a = *this, b = other;
    align_contexts(a, b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    *this = *this + other;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    *this = *this - other;
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial a = *this, b = other;
    align_contexts(a, b);
    Polynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial r(ctx_);
    if (scalar == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
    return r;
}

Polynomial Polynomial::operator+(const Rational& scalar) const {
    Polynomial r = *this;
    r.add_term(Monomial(ctx_ ? ctx_->size() : 0), scalar);
    return r;
}

Polynomial Polynomial::operator-(const Rational& scalar) const {
    return *this + Rational(-scalar);
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result = Polynomial::constant(ctx_, Rational(1));
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (same_context(ctx_, other.ctx_)) return terms_ == other.terms_;
    Polynomial a = *this, b = other;
    align_contexts(a, b);
    return a.terms_ == b.terms_;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    auto best = terms_.begin();
    if (order.kind() == MonomialOrder::Kind::GrevLex) {
        return {best->first, best->second}; // storage order is grevlex-descending
    }
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::derivative(int var) const {
    if (!ctx_ || var < 0 || static_cast<std::size_t>(var) >= ctx_->size())
        throw InvalidArgument("derivative variable out of range");
    Polynomial r(ctx_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Monomial d = m;
        d[v] -= 1;
        r.add_term(d, c * Rational(m[v]));
    }
    return r;
}

Polynomial Polynomial::derivative(const std::string& name) const {
    int i = ctx_ ? ctx_->index_of(name) : -1;
    if (i < 0) throw InvalidArgument("unknown variable: " + name);
    return derivative(i);
}

Polynomial Polynomial::substitute(const std::map<int, Rational>& bindings) const {
    std::map<int, Polynomial> polys;
    for (const auto& [v, value] : bindings) polys.emplace(v, Polynomial::constant(ctx_, value));
    return substitute(polys);
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& bindings) const {
    if (bindings.empty()) return *this;
    std::size_t n = ctx_ ? ctx_->size() : 0;
    for (const auto& [v, value] : bindings) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw InvalidArgument("substitution variable out of range");
    }
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = bindings.find(static_cast<int>(i));
        if (it == bindings.end())
            images.push_back(Polynomial::variable(ctx_, static_cast<int>(i)));
        else
            images.push_back(it->second);
    }
    return transplant(ctx_, images);
}

Polynomial Polynomial::transplant(const ContextPtr& target,
                                  const std::vector<Polynomial>& images) const {
    std::size_t n = ctx_ ? ctx_->size() : 0;
    if (images.size() != n)
        throw InvalidArgument("transplant needs one image per source variable");
    Polynomial result = Polynomial::zero(target);
    // Cache powers per variable; exponents are small at desk scale.
    std::vector<std::map<std::uint32_t, Polynomial>> powers(n);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t e = m[i];
            if (!e) continue;
            auto& cache = powers[i];
            auto it = cache.find(e);
            if (it == cache.end()) it = cache.emplace(e, images[i].pow(e)).first;
            term = term * it->second;
        }
        result += term;
    }
    return result;
}

Polynomial Polynomial::embed(const ContextPtr& target) const {
    if (same_context(ctx_, target)) {
        Polynomial r = *this;
        return r;
    }
    std::size_t n = ctx_ ? ctx_->size() : 0;
    std::vector<int> map(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        map[i] = target ? target->index_of(ctx_->name(i)) : -1;
        if (map[i] >= 0 && target->role(static_cast<std::size_t>(map[i])) != ctx_->role(i))
            throw InvalidArgument("conflicting role for variable '" + ctx_->name(i) +
                                  "' while embedding");
    }
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target ? target->size() : 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i]) continue;
            if (map[i] < 0)
                throw InvalidArgument("target context lacks variable '" + ctx_->name(i) + "'");
            t[static_cast<std::size_t>(map[i])] = m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(1);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (content < 0) content = -content;
    return content;
}

std::pair<Rational, Polynomial> Polynomial::primitive_decompose() const {
    if (terms_.empty()) return {Rational(1), *this};
    Rational c = content();
    // Sign convention: positive leading coefficient under plain lex.
    auto lex = MonomialOrder::lex(ctx_ ? ctx_->size() : 0);
    if (leading_term(lex).second < 0) c = -c;
    Polynomial prim(ctx_);
    for (const auto& [m, coeff] : terms_) prim.terms_.emplace(m, coeff / c);
    return {c, prim};
}

Polynomial Polynomial::primitive_part() const {
    return primitive_decompose().second;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
    std::size_t n = ctx_ ? ctx_->size() : 0;
    if (point.size() != n) throw InvalidArgument("evaluation point has wrong size");
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = rational_to_double(c);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
        }
        sum += t;
    }
    return sum;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    std::size_t n = ctx_ ? ctx_->size() : 0;
    if (point.size() != n) throw InvalidArgument("evaluation point has wrong size");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i]) continue;
            Rational power(1);
            Rational base = point[i];
            std::uint32_t e = m[i];
            while (e) {
                if (e & 1u) power *= base;
                e >>= 1u;
                if (e) base *= base;
            }
            t *= power;
        }
        sum += t;
    }
    return sum;
}

std::string Polynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                out << " - ";
                a = -a;
            } else {
                out << " + ";
            }
        }
        bool has_vars = !m.is_one();
        if (!has_vars || a != 1) {
            out << a.get_str();
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << ctx_->name(i);
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
    return p * scalar;
}

void align_contexts(Polynomial& a, Polynomial& b) {
    if (same_context(a.context(), b.context())) return;
    ContextPtr merged = merge_contexts(a.context(), b.context());
    a = a.embed(merged);
    b = b.embed(merged);
}

std::optional<Polynomial> try_divide(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw InvalidArgument("division by zero polynomial");
    Polynomial a = dividend, b = divisor;
    align_contexts(a, b);
    if (a.is_zero()) return Polynomial::zero(a.context());
    auto order = MonomialOrder::grevlex(a.context() ? a.context()->size() : 0);
    auto [bm, bc] = b.leading_term(order);
    Polynomial quotient = Polynomial::zero(a.context());
    while (!a.is_zero()) {
        auto [am, ac] = a.leading_term(order);
        if (!bm.divides(am)) return std::nullopt;
        Monomial q = am / bm;
        Rational qc = ac / bc;
        Polynomial step =
            Polynomial::from_terms(a.context(), Polynomial::TermMap{{q, qc}});
        quotient += step;
        a -= step * b;
    }
    return quotient;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, int var) {
    const auto& ctx = p.context();
    std::size_t n = ctx ? ctx->size() : 0;
    if (var < 0 || static_cast<std::size_t>(var) >= n)
        throw InvalidArgument("coefficient variable out of range");
    auto v = static_cast<std::size_t>(var);
    std::vector<Polynomial::TermMap> buckets(p.degree_in(var) + 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        std::uint32_t e = rest[v];
        rest[v] = 0;
        buckets[e].emplace(std::move(rest), c);
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& bucket : buckets) out.push_back(Polynomial::from_terms(ctx, std::move(bucket)));
    return out;
}

Polynomial assemble_in(const ContextPtr& ctx, int var, const std::vector<Polynomial>& coeffs) {
    Polynomial x = Polynomial::variable(ctx, var);
    Polynomial sum = Polynomial::zero(ctx);
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        sum += coeffs[e].embed(ctx) * x.pow(static_cast<std::uint32_t>(e));
    return sum;
}

} // namespace locus
