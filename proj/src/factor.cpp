#include "locus/factor.hpp"

#include "locus/errors.hpp"
#include "zpoly.hpp"

#include <algorithm>

namespace locus {

namespace {

Polynomial exact_divide(const Polynomial& a, const Polynomial& b, const char* where) {
    auto q = try_divide(a, b);
    if (!q) throw Error(std::string("internal: inexact division in ") + where);
    return *q;
}

// Yun's algorithm in the chosen variable plus recursion on the content.
void yun(const Polynomial& f, std::vector<FactorUnit>& out) {
    if (f.is_constant()) return;
    int var = f.support().front();

    Polynomial cont = Polynomial::zero(f.context());
    for (const auto& coeff : coefficients_in(f, var)) {
        if (coeff.is_zero()) continue;
        cont = cont.is_zero() ? coeff.primitive_part() : poly_gcd(cont, coeff);
        if (cont.is_constant()) break;
    }
    if (cont.is_zero()) cont = Polynomial::constant(f.context(), Rational(1));
    Polynomial pp = exact_divide(f, cont, "squarefree content").primitive_part();

    if (!pp.is_constant()) {
        Polynomial d = pp.derivative(var);
        Polynomial g = poly_gcd(pp, d);
        if (g.is_constant()) {
            out.push_back({pp, 1});
        } else {
            Polynomial b = exact_divide(pp, g, "Yun b");
            Polynomial c = exact_divide(d, g, "Yun c");
            Polynomial z = c - b.derivative(var);
            int i = 1;
            while (!b.is_constant()) {
                Polynomial a = poly_gcd(b, z);
                if (!a.is_constant()) out.push_back({a, i});
                b = exact_divide(b, a, "Yun step");
                c = exact_divide(z, a, "Yun step");
                z = c - b.derivative(var);
                ++i;
            }
        }
    }
    yun(cont.primitive_part(), out);
}

int compare_factors(const Polynomial& a, const Polynomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? -1 : 1; // higher degree first
    auto ita = a.terms().begin(), itb = b.terms().begin();
    while (ita != a.terms().end() && itb != b.terms().end()) {
        int c = grevlex_compare(ita->first, itb->first);
        if (c != 0) return c > 0 ? -1 : 1; // larger monomial first
        if (ita->second != itb->second) return ita->second < itb->second ? -1 : 1;
        ++ita;
        ++itb;
    }
    if (ita != a.terms().end()) return -1;
    if (itb != b.terms().end()) return 1;
    return 0;
}

void finish(Factorization& result, const Polynomial& input,
            bool multiplicity_major_order) {
    if (multiplicity_major_order) {
        std::sort(result.factors.begin(), result.factors.end(),
                  [](const FactorUnit& x, const FactorUnit& y) {
                      if (x.multiplicity != y.multiplicity)
                          return x.multiplicity < y.multiplicity;
                      return compare_factors(x.factor, y.factor) < 0;
                  });
    } else {
        std::sort(result.factors.begin(), result.factors.end(),
                  [](const FactorUnit& x, const FactorUnit& y) {
                      int c = compare_factors(x.factor, y.factor);
                      if (c != 0) return c < 0;
                      return x.multiplicity < y.multiplicity;
                  });
    }
    // The reported constant is fixed by exact reconstruction.
    Polynomial product = Polynomial::constant(input.context(), Rational(1));
    for (const auto& [f, m] : result.factors)
        product = product * f.pow(static_cast<std::uint32_t>(m));
    auto order = MonomialOrder::grevlex(input.context() ? input.context()->size() : 0);
    auto [lm_in, lc_in] = input.leading_term(order);
    auto [lm_pr, lc_pr] = product.leading_term(order);
    if (lm_in != lm_pr) throw Error("internal: factorization dropped the leading monomial");
    result.constant = lc_in / lc_pr;
    if (!(product * result.constant == input))
        throw Error("internal: factorization does not reconstruct its input");
}

// ---------- Kronecker substitution ----------

struct KroneckerMap {
    std::vector<int> vars; // support variables, context order
    std::uint64_t base = 0;
};

detail::ZPoly kronecker_image(const Polynomial& p, const KroneckerMap& km) {
    detail::ZPoly image;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t e = 0, scale = 1;
        for (int v : km.vars) {
            e += scale * m[static_cast<std::size_t>(v)];
            scale *= km.base;
        }
        if (image.size() <= e) image.resize(e + 1, Integer(0));
        if (c.get_den() != 1) throw Error("internal: Kronecker input not integral");
        image[e] += c.get_num();
    }
    detail::znorm(image);
    return image;
}

Polynomial kronecker_preimage(const detail::ZPoly& g, const KroneckerMap& km,
                              const ContextPtr& ctx) {
    Polynomial::TermMap terms;
    for (std::size_t e = 0; e < g.size(); ++e) {
        if (g[e] == 0) continue;
        Monomial m(ctx->size());
        std::uint64_t rest = e;
        for (std::size_t i = 0; i < km.vars.size(); ++i) {
            std::uint64_t digit =
                (i + 1 == km.vars.size()) ? rest : rest % km.base;
            rest /= km.base;
            m[static_cast<std::size_t>(km.vars[i])] = static_cast<std::uint32_t>(digit);
        }
        terms.emplace(std::move(m), Rational(g[e]));
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

// Irreducible factors of a squarefree primitive polynomial with >= 2
// support variables: factor the Kronecker image, then recombine subsets of
// its integer factors, verifying every candidate by exact division.
std::vector<Polynomial> factor_multivariate(const Polynomial& f) {
    const auto& ctx = f.context();
    KroneckerMap km;
    km.vars = f.support();
    std::uint32_t maxdeg = 0;
    for (int v : km.vars) maxdeg = std::max(maxdeg, f.degree_in(v));
    km.base = static_cast<std::uint64_t>(maxdeg) + 1;

    detail::ZPoly image = kronecker_image(f, km);
    detail::ZPoly prim = detail::zprimitive(image);

    // Full univariate factorization of the image (it need not stay
    // squarefree under the substitution).
    std::vector<detail::ZPoly> items;
    {
        detail::ZPoly work = prim;
        detail::ZPoly d = detail::zderiv(work);
        // squarefree split over Z via gcd with the derivative
        for (;;) {
            if (detail::zdeg(work) < 1) break;
            // gcd(work, work') by subresultant-free route: reuse rational
            // kernel on a 1-variable context would be circular; do a simple
            // PRS over Z through primitive parts.
            detail::ZPoly a = work, b = detail::zprimitive(detail::zderiv(work));
            while (detail::zdeg(b) > 0) {
                // pseudo-remainder then primitive part
                detail::ZPoly r = a;
                const Integer lc = b.back();
                while (detail::zdeg(r) >= detail::zdeg(b)) {
                    Integer top = r.back();
                    std::size_t shift = r.size() - b.size();
                    detail::ZPoly scaled = detail::zscale(r, lc);
                    detail::ZPoly sub(shift, Integer(0));
                    sub.insert(sub.end(), b.begin(), b.end());
                    r = detail::zsub(scaled, detail::zscale(sub, top));
                    if (detail::zdeg(r) < 0) break;
                }
                a = b;
                b = detail::zprimitive(r);
            }
            detail::ZPoly g = (detail::zdeg(b) == 0 && !b.empty())
                                  ? detail::ZPoly{Integer(1)}
                                  : detail::zprimitive(a);
            if (detail::zdeg(g) < 1) {
                for (auto& irr : detail::factor_squarefree_primitive(work))
                    items.push_back(std::move(irr));
                break;
            }
            detail::ZPoly squarefree_part;
            if (!detail::zdivide_exact(work, g, squarefree_part))
                throw Error("internal: squarefree split failed");
            for (auto& irr : detail::factor_squarefree_primitive(
                     detail::zprimitive(squarefree_part)))
                items.push_back(std::move(irr));
            work = g;
        }
    }

    std::vector<Polynomial> result;
    Polynomial rest = f;
    std::vector<detail::ZPoly> pool = std::move(items);
    if (pool.size() > 28) throw ResourceError("Kronecker recombination has too many factors");

    std::size_t size = 1;
    while (2 * size <= pool.size() && !rest.is_constant()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            detail::ZPoly cand_image{Integer(1)};
            for (std::size_t i : idx) cand_image = detail::zmul(cand_image, pool[i]);
            Polynomial cand = kronecker_preimage(cand_image, km, ctx).primitive_part();
            if (!cand.is_constant()) {
                if (auto q = try_divide(rest, cand)) {
                    result.push_back(cand);
                    rest = q->primitive_part();
                    std::vector<detail::ZPoly> next;
                    for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                        if (j < idx.size() && idx[j] == i) {
                            ++j;
                            continue;
                        }
                        next.push_back(pool[i]);
                    }
                    pool = std::move(next);
                    found = true;
                    break;
                }
            }
            std::size_t i = size;
            bool advanced = false;
            while (i-- > 0) {
                if (idx[i] + (size - i) < pool.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (!found) ++size;
    }
    if (!rest.is_constant()) result.push_back(rest.primitive_part());
    return result;
}

std::vector<Polynomial> factor_univariate(const Polynomial& f, int var) {
    detail::ZPoly dense;
    for (const auto& coeff : coefficients_in(f, var)) {
        if (!coeff.is_constant()) throw Error("internal: univariate input expected");
        Rational c = coeff.constant_value();
        if (c.get_den() != 1) throw Error("internal: univariate input not integral");
        dense.push_back(c.get_num());
    }
    detail::znorm(dense);
    std::vector<Polynomial> out;
    const auto& ctx = f.context();
    Polynomial x = Polynomial::variable(ctx, var);
    for (const auto& zf : detail::factor_squarefree_primitive(detail::zprimitive(dense))) {
        Polynomial p = Polynomial::zero(ctx);
        for (std::size_t i = 0; i < zf.size(); ++i)
            p += Polynomial::constant(ctx, Rational(zf[i])) * x.pow(static_cast<std::uint32_t>(i));
        out.push_back(p.primitive_part());
    }
    return out;
}

} // namespace

Polynomial Factorization::reconstruct(const ContextPtr& ctx) const {
    Polynomial product = Polynomial::constant(ctx, constant);
    for (const auto& [f, m] : factors)
        product = product * f.pow(static_cast<std::uint32_t>(m));
    return product;
}

Factorization squarefree_decompose(const Polynomial& p) {
    if (p.is_zero()) throw InvalidArgument("square-free decomposition of zero");
    Factorization result;
    if (p.is_constant()) {
        result.constant = p.constant_value();
        return result;
    }
    auto [c, prim] = p.primitive_decompose();
    std::vector<FactorUnit> units;
    yun(prim, units);
    for (auto& u : units) u.factor = u.factor.primitive_part();
    result.factors = std::move(units);
    finish(result, p, /*multiplicity_major_order=*/true);
    return result;
}

Factorization factor(const Polynomial& p) {
    if (p.is_zero() || p.is_constant())
        throw InvalidArgument("factorization needs a non-constant polynomial");
    Factorization result;
    Factorization sf = squarefree_decompose(p);
    for (const auto& [sq_factor, multiplicity] : sf.factors) {
        auto support = sq_factor.support();
        std::vector<Polynomial> irreducibles;
        if (support.size() == 1)
            irreducibles = factor_univariate(sq_factor, support.front());
        else
            irreducibles = factor_multivariate(sq_factor);
        for (auto& irr : irreducibles)
            result.factors.push_back({irr.primitive_part(), multiplicity});
    }
    finish(result, p, /*multiplicity_major_order=*/false);
    return result;
}

bool factor_canonical_less(const Polynomial& a, const Polynomial& b) {
    return compare_factors(a, b) < 0;
}

} // namespace locus
