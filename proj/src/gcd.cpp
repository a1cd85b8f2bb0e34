#include "locus/errors.hpp"
#include "locus/factor.hpp"

#include <algorithm>

namespace locus {

namespace {

Polynomial exact_divide(const Polynomial& a, const Polynomial& b, const char* where) {
    auto q = try_divide(a, b);
    if (!q) throw Error(std::string("internal: inexact division in ") + where);
    return *q;
}

Polynomial one(const ContextPtr& ctx) {
    return Polynomial::constant(ctx, Rational(1));
}

Polynomial gcd_inner(Polynomial p, Polynomial q);

// gcd of the dense v-coefficients of p.
Polynomial content_in(const Polynomial& p, int var) {
    Polynomial acc = Polynomial::zero(p.context());
    for (const auto& coeff : coefficients_in(p, var)) {
        if (coeff.is_zero()) continue;
        acc = acc.is_zero() ? coeff.primitive_part()
                            : gcd_inner(acc, coeff.primitive_part()).primitive_part();
        if (acc.is_constant()) break;
    }
    if (acc.is_zero()) return one(p.context());
    return acc;
}

// lc_v(B)^(deg_v A - deg_v B + 1) * A mod B, dividing in v only.
Polynomial pseudo_remainder(const Polynomial& A, const Polynomial& B, int var) {
    std::uint32_t db = B.degree_in(var);
    Polynomial lcb = coefficients_in(B, var)[db];
    Polynomial R = A;
    std::int64_t e = static_cast<std::int64_t>(A.degree_in(var)) - db + 1;
    const auto& ctx = A.context();
    Polynomial v_poly = Polynomial::variable(ctx, var);
    while (!R.is_zero() && R.degree_in(var) >= db) {
        std::uint32_t dr = R.degree_in(var);
        Polynomial lcr = coefficients_in(R, var)[dr];
        R = lcb * R - lcr * v_poly.pow(dr - db) * B;
        --e;
    }
    for (; e > 0; --e) R = R * lcb;
    return R;
}

// Subresultant polynomial remainder sequence for v-primitive A, B with
// positive degree in v.
Polynomial prs_gcd(Polynomial A, Polynomial B, int var) {
    const auto& ctx = A.context();
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
    Polynomial g = one(ctx), h = one(ctx);
    for (;;) {
        std::uint32_t delta = A.degree_in(var) - B.degree_in(var);
        Polynomial R = pseudo_remainder(A, B, var);
        if (R.is_zero()) break;
        if (R.degree_in(var) == 0) return one(ctx); // coprime in v
        A = B;
        B = exact_divide(R, g * h.pow(delta), "subresultant PRS");
        g = coefficients_in(A, var)[A.degree_in(var)];
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_divide(g.pow(delta), h.pow(delta - 1), "subresultant scale");
        }
    }
    return exact_divide(B, content_in(B, var), "primitive part").primitive_part();
}

Polynomial gcd_inner(Polynomial p, Polynomial q) {
    const auto& ctx = p.context();
    // Variables present on one side only cannot appear in the gcd: a
    // w-free divisor of p divides every w-coefficient, so gcd(p, q) =
    // gcd(cont_w(p), q) when w does not occur in q.
    for (;;) {
        if (p.is_constant() || q.is_constant()) return one(ctx);
        auto sp = p.support();
        auto sq = q.support();
        int peel = -1;
        bool peel_left = true;
        for (int v : sp)
            if (!std::binary_search(sq.begin(), sq.end(), v)) {
                peel = v;
                break;
            }
        if (peel < 0) {
            for (int v : sq)
                if (!std::binary_search(sp.begin(), sp.end(), v)) {
                    peel = v;
                    peel_left = false;
                    break;
                }
        }
        if (peel < 0) break;
        if (peel_left)
            p = content_in(p, peel);
        else
            q = content_in(q, peel);
    }

    int var = p.support().back();
    Polynomial cp = content_in(p, var);
    Polynomial cq = content_in(q, var);
    Polynomial c = gcd_inner(cp, cq);
    Polynomial A = exact_divide(p, cp, "content split");
    Polynomial B = exact_divide(q, cq, "content split");
    Polynomial pp = prs_gcd(A, B, var);
    return (c * pp).primitive_part();
}

} // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    Polynomial a = p, b = q;
    align_contexts(a, b);
    if (a.is_zero() && b.is_zero()) return Polynomial::zero(a.context());
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    return gcd_inner(a.primitive_part(), b.primitive_part()).primitive_part();
}

} // namespace locus
