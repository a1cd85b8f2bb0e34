#include "locus/solve.hpp"

#include "locus/errors.hpp"
#include "locus/factor.hpp"

#include <algorithm>
#include <map>

namespace locus {

namespace {

// Generators of an ideal whose variety is V(a) union V(b).
Ideal product_ideal(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const auto& p : a.generators)
        for (const auto& q : b.generators) gens.push_back(p * q);
    return Ideal::make(a.context, std::move(gens));
}

void push_unique(std::vector<Polynomial>& gens, const Polynomial& p) {
    if (p.is_zero()) return;
    for (const auto& g : gens)
        if (g == p) return;
    gens.push_back(p);
}

struct Solver {
    ContextPtr ctx;
    GroebnerOptions opts;
    std::vector<std::vector<Rational>> points;
    std::vector<Ideal> residuals;

    void record_residual(const std::vector<Polynomial>& basis, const Polynomial& cofactor,
                         const std::map<int, Rational>& bindings) {
        std::vector<Polynomial> gens;
        for (const auto& b : basis) push_unique(gens, b);
        push_unique(gens, cofactor);
        for (const auto& [v, value] : bindings)
            push_unique(gens, Polynomial::variable(ctx, v) -
                                  Polynomial::constant(ctx, value));
        residuals.push_back(Ideal::make(ctx, std::move(gens)));
    }

    void run(const std::vector<Polynomial>& gens, std::map<int, Rational> bindings) {
        std::size_t n = ctx->size();
        GroebnerBasis gb =
            buchberger(Ideal::make(ctx, gens), MonomialOrder::lex(n), opts);
        if (gb.basis.size() == 1 && gb.basis.front().is_constant()) return; // inconsistent

        int next = -1;
        for (std::size_t i = n; i-- > 0;) {
            if (!bindings.count(static_cast<int>(i))) {
                next = static_cast<int>(i);
                break;
            }
        }
        if (next < 0) {
            std::vector<Rational> point(n);
            for (const auto& [v, value] : bindings) point[static_cast<std::size_t>(v)] = value;
            points.push_back(std::move(point));
            return;
        }

        // Reduced Lex basis of a consistent zero-dimensional system contains
        // a univariate polynomial in the least unbound variable.
        const Polynomial* univariate = nullptr;
        for (const auto& b : gb.basis) {
            auto s = b.support();
            if (s.size() == 1 && s.front() == next) {
                univariate = &b;
                break;
            }
        }
        if (!univariate) {
            record_residual(gb.basis, Polynomial::zero(ctx), bindings);
            return;
        }

        Factorization fac = factor(*univariate);
        std::vector<Rational> roots;
        Polynomial cofactor = Polynomial::constant(ctx, Rational(1));
        for (const auto& [f, m] : fac.factors) {
            if (f.total_degree() == 1) {
                auto coeffs = coefficients_in(f, next);
                Rational c0 = coeffs.size() > 0 ? coeffs[0].constant_value() : Rational(0);
                Rational c1 = coeffs.size() > 1 ? coeffs[1].constant_value() : Rational(0);
                roots.push_back(-c0 / c1);
            } else {
                cofactor = cofactor * f;
            }
        }
        if (!cofactor.is_constant()) record_residual(gb.basis, cofactor, bindings);

        std::sort(roots.begin(), roots.end());
        for (const auto& r : roots) {
            std::vector<Polynomial> sub;
            sub.reserve(gb.basis.size());
            std::map<int, Rational> binding{{next, r}};
            for (const auto& b : gb.basis) {
                Polynomial s = b.substitute(binding);
                if (!s.is_zero()) sub.push_back(std::move(s));
            }
            auto extended = bindings;
            extended.emplace(next, r);
            run(sub, std::move(extended));
        }
    }
};

} // namespace

ZeroDimSolution solve_zero_dim(const Ideal& ideal, const GroebnerOptions& opts) {
    const auto& ctx = ideal.context;
    std::size_t n = ctx ? ctx->size() : 0;
    if (ideal.is_zero_ideal())
        throw InvalidArgument("ideal is not zero-dimensional (zero ideal)");

    GroebnerBasis gb = buchberger(ideal, MonomialOrder::lex(n), opts);
    ZeroDimSolution solution;
    if (gb.basis.size() == 1 && gb.basis.front().is_constant()) return solution; // empty variety

    auto lex = MonomialOrder::lex(n);
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& b : gb.basis) {
            Monomial lm = b.leading_term(lex).first;
            if (lm[v] == 0) continue;
            bool only_v = true;
            for (std::size_t i = 0; i < n; ++i)
                if (i != v && lm[i]) {
                    only_v = false;
                    break;
                }
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw InvalidArgument("ideal is not zero-dimensional (no pure power of " +
                                  ctx->name(v) + " among leading terms)");
    }

    Solver solver{ctx, opts, {}, {}};
    solver.run(gb.basis, {});

    std::sort(solver.points.begin(), solver.points.end());
    solution.points = std::move(solver.points);
    if (!solver.residuals.empty()) {
        Ideal acc = solver.residuals.front();
        for (std::size_t i = 1; i < solver.residuals.size(); ++i)
            acc = product_ideal(acc, solver.residuals[i]);
        solution.residual = std::move(acc);
    }
    return solution;
}

} // namespace locus
