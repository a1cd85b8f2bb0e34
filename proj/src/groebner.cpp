#include "locus/groebner.hpp"

#include "locus/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace locus {

Ideal Ideal::make(ContextPtr ctx, std::vector<Polynomial> gens) {
    Ideal ideal;
    ideal.context = std::move(ctx);
    for (auto& g : gens) {
        Polynomial e = g.embed(ideal.context);
        if (!e.is_zero()) ideal.generators.push_back(std::move(e));
    }
    if (ideal.generators.empty()) ideal.generators.push_back(Polynomial::zero(ideal.context));
    return ideal;
}

Ideal Ideal::zero(ContextPtr ctx) {
    Ideal ideal;
    ideal.context = std::move(ctx);
    ideal.generators.push_back(Polynomial::zero(ideal.context));
    return ideal;
}

bool Ideal::is_zero_ideal() const {
    return generators.size() == 1 && generators.front().is_zero();
}

std::string Ideal::to_text() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out << ", ";
        out << generators[i].to_text();
    }
    out << "}";
    return out.str();
}

namespace {

struct Divisor {
    const Polynomial* poly;
    Monomial lead_mono;
    Rational lead_coeff;
};

// Division remainder with an explicit shared step budget.
Polynomial normal_form_impl(const Polynomial& p, const std::vector<Divisor>& divisors,
                            const MonomialOrder& order, std::uint64_t& used,
                            std::uint64_t limit) {
    if (divisors.empty() || p.is_zero()) return p;

    auto cmp = order.desc();
    std::map<Monomial, Rational, MonomialOrder::Desc> work(cmp);
    for (const auto& [m, c] : p.terms()) work.emplace(m, c);
    Polynomial::TermMap remainder;

    while (!work.empty()) {
        auto it = work.begin();
        Monomial mono = it->first;
        Rational coeff = it->second;
        const Divisor* hit = nullptr;
        for (const auto& d : divisors) {
            if (d.lead_mono.divides(mono)) {
                hit = &d;
                break;
            }
        }
        if (!hit) {
            remainder.emplace(std::move(mono), std::move(coeff));
            work.erase(it);
            continue;
        }
        if (++used > limit)
            throw ResourceError("division step budget exceeded (" + std::to_string(limit) +
                                " steps)");
        Monomial shift = mono / hit->lead_mono;
        Rational scale = coeff / hit->lead_coeff;
        for (const auto& [dm, dc] : hit->poly->terms()) {
            Monomial target = shift * dm;
            Rational delta = scale * dc;
            auto [slot, inserted] = work.emplace(target, -delta);
            if (!inserted) {
                slot->second -= delta;
                if (slot->second == 0) work.erase(slot);
            }
        }
    }
    return Polynomial::from_terms(p.context(), std::move(remainder));
}

std::vector<Divisor> make_divisors(const std::vector<Polynomial>& polys,
                                   const MonomialOrder& order) {
    std::vector<Divisor> divisors;
    divisors.reserve(polys.size());
    for (const auto& q : polys) {
        if (q.is_zero()) continue;
        auto [m, c] = q.leading_term(order);
        divisors.push_back({&q, std::move(m), std::move(c)});
    }
    return divisors;
}

} // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order, const GroebnerOptions& opts) {
    std::uint64_t used = 0;
    return normal_form_impl(p, make_divisors(divisors, order), order, used, opts.max_steps);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw InvalidArgument("s_polynomial of the zero polynomial");
    auto [fm, fc] = f.leading_term(order);
    auto [gm, gc] = g.leading_term(order);
    Monomial lcm = Monomial::lcm(fm, gm);
    Polynomial left = Polynomial::from_terms(
        f.context(), Polynomial::TermMap{{lcm / fm, Rational(1) / fc}});
    Polynomial right = Polynomial::from_terms(
        g.context(), Polynomial::TermMap{{lcm / gm, Rational(1) / gc}});
    return left * f - right * g;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
    const auto& ctx = ideal.context;
    if (order.context_size() != (ctx ? ctx->size() : 0))
        throw InvalidArgument("order context size mismatch");

    GroebnerBasis result{ideal, order, {}};
    if (ideal.is_zero_ideal()) return result;

    std::uint64_t used = 0;
    const std::uint64_t limit = opts.max_steps;

    std::vector<Polynomial> basis;
    std::vector<Monomial> leads;
    std::vector<std::uint64_t> sugars;

    struct PairKey {
        std::uint64_t sugar;
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        const MonomialOrder* order;
        bool operator()(const PairKey& a, const PairKey& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (int c = order->compare(a.lcm, b.lcm)) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<PairKey, PairLess> pairs(PairLess{&order});
    std::set<std::pair<std::size_t, std::size_t>> treated;

    auto push_pairs_for = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            Monomial lcm = Monomial::lcm(leads[k], leads[n]);
            std::uint64_t sugar =
                std::max(sugars[k] + (lcm / leads[k]).total_degree(),
                         sugars[n] + (lcm / leads[n]).total_degree());
            pairs.insert({sugar, std::move(lcm), k, n});
        }
    };

    auto append = [&](Polynomial p, std::uint64_t sugar) {
        auto [m, c] = p.leading_term(order);
        basis.push_back(std::move(p));
        leads.push_back(std::move(m));
        sugars.push_back(std::max<std::uint64_t>(sugar, basis.back().total_degree()));
        push_pairs_for(basis.size() - 1);
    };

    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        append(g.primitive_part(), g.total_degree());
    }

    bool trivial = false;
    for (const auto& b : basis)
        if (b.is_constant()) trivial = true;

    while (!pairs.empty() && !trivial) {
        PairKey key = *pairs.begin();
        pairs.erase(pairs.begin());
        treated.emplace(key.i, key.j);

        // Buchberger's first criterion: coprime leading terms.
        if (Monomial::coprime(leads[key.i], leads[key.j])) continue;
        // Chain criterion: some k divides the lcm and both flanking pairs
        // were already considered.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == key.i || k == key.j) continue;
            if (!leads[k].divides(key.lcm)) continue;
            auto a = std::minmax(key.i, k);
            auto b = std::minmax(key.j, k);
            if (treated.count({a.first, a.second}) && treated.count({b.first, b.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[key.i], basis[key.j], order);
        Polynomial r = normal_form_impl(s, make_divisors(basis, order), order, used, limit);
        if (r.is_zero()) continue;
        r = r.primitive_part(); // content removal after every reduction
        if (r.is_constant()) {
            trivial = true;
            break;
        }
        append(std::move(r), key.sugar);
    }

    if (trivial) {
        result.basis.push_back(Polynomial::constant(ctx, Rational(1)));
        return result;
    }

    // Minimalize: drop elements whose leading term another leading term divides.
    std::vector<Polynomial> minimal;
    std::vector<Monomial> minimal_leads;
    {
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (int c = order.compare(leads[a], leads[b])) return c < 0;
            return a < b;
        });
        for (std::size_t i : idx) {
            bool divisible = false;
            for (const auto& m : minimal_leads)
                if (m.divides(leads[i])) {
                    divisible = true;
                    break;
                }
            if (!divisible) {
                minimal.push_back(basis[i]);
                minimal_leads.push_back(leads[i]);
            }
        }
    }

    // Tail-reduce until stable -> the reduced basis (unique up to scaling).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r =
                normal_form_impl(minimal[i], make_divisors(others, order), order, used, limit);
            r = r.primitive_part();
            if (!(r == minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_term(order).first, b.leading_term(order).first) < 0;
    });
    result.basis = std::move(minimal);
    return result;
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<int>& keep,
                        const GroebnerOptions& opts) {
    const auto& ctx = ideal.context;
    std::size_t n = ctx ? ctx->size() : 0;
    std::vector<char> keep_mask(n, 0);
    for (int v : keep) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw InvalidArgument("keep variable out of range");
        keep_mask[static_cast<std::size_t>(v)] = 1;
    }
    if (ideal.is_zero_ideal()) return Ideal::zero(ctx);

    std::vector<int> front;
    for (std::size_t i = 0; i < n; ++i)
        if (!keep_mask[i]) front.push_back(static_cast<int>(i));

    MonomialOrder order =
        front.empty() ? MonomialOrder::grevlex(n) : MonomialOrder::block(front, n);
    GroebnerBasis gb = buchberger(ideal, order, opts);

    std::vector<Polynomial> selected;
    for (const auto& b : gb.basis)
        if (front.empty() || b.uses_only(keep_mask)) selected.push_back(b);
    if (selected.empty()) return Ideal::zero(ctx);
    return Ideal::make(ctx, std::move(selected));
}

bool is_member(const Polynomial& p, const Ideal& ideal, const GroebnerOptions& opts) {
    if (ideal.is_zero_ideal()) return p.is_zero();
    auto order = MonomialOrder::grevlex(ideal.context ? ideal.context->size() : 0);
    GroebnerBasis gb = buchberger(ideal, order, opts);
    return normal_form(p.embed(ideal.context), gb.basis, order, opts).is_zero();
}

bool is_trivial(const Ideal& ideal, const GroebnerOptions& opts) {
    if (ideal.is_zero_ideal()) return false;
    for (const auto& g : ideal.generators)
        if (g.is_constant() && !g.is_zero()) return true;
    auto order = MonomialOrder::grevlex(ideal.context ? ideal.context->size() : 0);
    GroebnerBasis gb = buchberger(ideal, order, opts);
    return gb.basis.size() == 1 && gb.basis.front().is_constant();
}

SaturationResult rabinowitsch_saturate(const Ideal& ideal, const Polynomial& t) {
    if (t.is_zero()) throw InvalidArgument("cannot saturate by the zero polynomial");
    const auto& ctx = ideal.context;

    std::string slack = "z";
    bool renamed = false;
    for (int suffix = 1; ctx && ctx->contains(slack); ++suffix) {
        slack = "z" + std::to_string(suffix);
        renamed = true;
    }

    std::vector<std::pair<std::string, VariableRole>> vars;
    for (std::size_t i = 0; ctx && i < ctx->size(); ++i)
        vars.emplace_back(ctx->name(i), ctx->role(i));
    vars.emplace_back(slack, VariableRole::Slack);
    ContextPtr extended = make_context(std::move(vars));

    std::vector<Polynomial> gens;
    if (!ideal.is_zero_ideal())
        for (const auto& g : ideal.generators) gens.push_back(g.embed(extended));
    Polynomial z = Polynomial::variable(extended, slack);
    gens.push_back(t.embed(extended) * z - Polynomial::constant(extended, Rational(1)));

    return {Ideal::make(extended, std::move(gens)), slack, renamed};
}

Ideal restrict_to_variables(const Ideal& ideal, const std::vector<int>& keep) {
    const auto& ctx = ideal.context;
    std::vector<std::pair<std::string, VariableRole>> vars;
    for (int v : keep) {
        if (v < 0 || !ctx || static_cast<std::size_t>(v) >= ctx->size())
            throw InvalidArgument("restrict variable out of range");
        vars.emplace_back(ctx->name(static_cast<std::size_t>(v)),
                          ctx->role(static_cast<std::size_t>(v)));
    }
    ContextPtr sub = make_context(std::move(vars));
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) gens.push_back(g.embed(sub));
    return Ideal::make(sub, std::move(gens));
}

} // namespace locus
