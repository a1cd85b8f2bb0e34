#include "zpoly.hpp"

#include "locus/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace locus::detail {

int zdeg(const ZPoly& f) {
    return static_cast<int>(f.size()) - 1;
}

void znorm(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    znorm(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    znorm(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    znorm(r);
    return r;
}

ZPoly zscale(const ZPoly& a, const Integer& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Integer zcontent(const ZPoly& f) {
    Integer g(0);
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zprimitive(const ZPoly& f) {
    if (f.empty()) return f;
    Integer c = zcontent(f);
    if (f.back() < 0) c = -c;
    ZPoly r = f;
    for (auto& x : r) x /= c;
    return r;
}

ZPoly zderiv(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Integer(static_cast<long>(i));
    znorm(r);
    return r;
}

bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.empty()) throw InvalidArgument("division by zero polynomial");
    if (a.empty()) {
        quotient.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, Integer(0));
    const Integer& lc = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer top = rem[k + b.size() - 1];
        if (top == 0) continue;
        Integer step = top / lc;
        if (step * lc != top) return false;
        q[k] = step;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= step * b[j];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    znorm(q);
    quotient = std::move(q);
    return true;
}

namespace {

// ---------- arithmetic mod an odd prime p ----------

using PPoly = std::vector<Integer>; // entries in [0, p)

void pnorm(PPoly& f, const Integer& p) {
    for (auto& c : f) {
        c %= p;
        if (c < 0) c += p;
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly preduce(const ZPoly& f, const Integer& p) {
    PPoly r(f.begin(), f.end());
    pnorm(r, p);
    return r;
}

PPoly pmul(const PPoly& a, const PPoly& b, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    pnorm(r, p);
    return r;
}

PPoly psub(const PPoly& a, const PPoly& b, const Integer& p) {
    PPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    pnorm(r, p);
    return r;
}

Integer pinv(const Integer& a, const Integer& p) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw Error("internal: non-invertible element mod p");
    return r;
}

PPoly pscale(const PPoly& a, const Integer& c, const Integer& p) {
    PPoly r = a;
    for (auto& x : r) x = x * c % p;
    pnorm(r, p);
    return r;
}

PPoly pmonic(const PPoly& a, const Integer& p) {
    if (a.empty()) return a;
    return pscale(a, pinv(a.back(), p), p);
}

// quotient/remainder; b nonzero.
void pdivmod(const PPoly& a, const PPoly& b, const Integer& p, PPoly& q, PPoly& r) {
    q.clear();
    r = a;
    if (b.empty()) throw InvalidArgument("mod-p division by zero");
    if (a.size() < b.size()) return;
    Integer lcinv = pinv(b.back(), p);
    q.assign(a.size() - b.size() + 1, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (r.size() < k + b.size()) continue;
        Integer top = r[k + b.size() - 1] % p;
        if (top == 0) continue;
        Integer step = top * lcinv % p;
        q[k] = step;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[k + j] = (r[k + j] - step * b[j]) % p;
            if (r[k + j] < 0) r[k + j] += p;
        }
    }
    pnorm(q, p);
    pnorm(r, p);
}

PPoly pmod(const PPoly& a, const PPoly& b, const Integer& p) {
    PPoly q, r;
    pdivmod(a, b, p, q, r);
    return r;
}

PPoly pgcd(PPoly a, PPoly b, const Integer& p) {
    pnorm(a, p);
    pnorm(b, p);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

PPoly ppow_mod(PPoly base, Integer e, const PPoly& mod, const Integer& p) {
    PPoly result{Integer(1)};
    base = pmod(base, mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = pmod(pmul(result, base, p), mod, p);
        e >>= 1;
        if (e > 0) base = pmod(pmul(base, base, p), mod, p);
    }
    return result;
}

// ---------- Cantor-Zassenhaus over F_p ----------

PPoly random_ppoly(std::size_t max_deg, const Integer& p, std::mt19937_64& rng) {
    PPoly r(max_deg + 1);
    for (auto& c : r) c = Integer(static_cast<unsigned long>(rng() % 1000003)) % p;
    pnorm(r, p);
    return r;
}

void equal_degree_split(const PPoly& h, int d, const Integer& p, std::mt19937_64& rng,
                        std::vector<PPoly>& out) {
    if (zdeg(h) == d) {
        out.push_back(h);
        return;
    }
    Integer pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    Integer exponent = (pd - 1) / 2;
    for (;;) {
        PPoly r = random_ppoly(static_cast<std::size_t>(zdeg(h) - 1), p, rng);
        if (zdeg(r) < 1) continue;
        PPoly s = ppow_mod(r, exponent, h, p);
        s = psub(s, PPoly{Integer(1)}, p);
        PPoly g = pgcd(h, s, p);
        if (zdeg(g) > 0 && zdeg(g) < zdeg(h)) {
            PPoly q, rem;
            pdivmod(h, g, p, q, rem);
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pmonic(q, p), d, p, rng, out);
            return;
        }
    }
}

// Monic squarefree f -> monic irreducible factors mod p.
std::vector<PPoly> factor_mod_p(PPoly f, const Integer& p, std::mt19937_64& rng) {
    std::vector<PPoly> out;
    PPoly x{Integer(0), Integer(1)};
    PPoly frob = x;
    for (int d = 1; 2 * d <= zdeg(f); ++d) {
        frob = ppow_mod(frob, p, f, p);
        PPoly g = pgcd(f, psub(frob, x, p), p);
        if (zdeg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            PPoly q, rem;
            pdivmod(f, g, p, q, rem);
            f = pmonic(q, p);
            frob = pmod(frob, f, p);
        }
    }
    if (zdeg(f) > 0) out.push_back(f);
    return out;
}

// ---------- Hensel lifting ----------

void modnorm(ZPoly& f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    znorm(f);
}

// Lift f = g*h (mod p) to f = G*H (mod p^k); f, g, h monic.
void hensel_pair_lift(const ZPoly& f, const PPoly& g0, const PPoly& h0, const Integer& p,
                      unsigned k, ZPoly& G, ZPoly& H) {
    // Bezout s*g + t*h = 1 mod p via extended Euclid.
    PPoly s{}, t{};
    {
        PPoly r0 = g0, r1 = h0;
        PPoly s0{Integer(1)}, s1{};
        PPoly t0{}, t1{Integer(1)};
        while (!r1.empty()) {
            PPoly q, r;
            pdivmod(r0, r1, p, q, r);
            PPoly s2 = psub(s0, pmul(q, s1, p), p);
            PPoly t2 = psub(t0, pmul(q, t1, p), p);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (zdeg(r0) != 0) throw Error("internal: Hensel factors are not coprime mod p");
        Integer inv = pinv(r0[0], p);
        s = pscale(s0, inv, p);
        t = pscale(t0, inv, p);
    }

    G.assign(g0.begin(), g0.end());
    H.assign(h0.begin(), h0.end());
    Integer m = p;
    Integer target;
    mpz_pow_ui(target.get_mpz_t(), p.get_mpz_t(), k);
    while (m < target) {
        // e = (f - G*H)/m mod p
        ZPoly diff = zsub(f, zmul(G, H));
        ZPoly e;
        e.reserve(diff.size());
        for (auto& c : diff) e.push_back(c / m);
        PPoly ep = preduce(e, p);
        // sigma*G + tau*H = e (mod p), deg sigma < deg h
        PPoly se = pmul(s, ep, p);
        PPoly q, sigma;
        pdivmod(se, h0, p, q, sigma);
        PPoly tau = zadd(pmul(t, ep, p), pmul(q, g0, p));
        pnorm(tau, p);
        // G += m*tau, H += m*sigma
        G = zadd(G, zscale(ZPoly(tau.begin(), tau.end()), m));
        H = zadd(H, zscale(ZPoly(sigma.begin(), sigma.end()), m));
        m *= p;
        modnorm(G, m);
        modnorm(H, m);
        // keep monic representatives
        if (!G.empty()) G.back() = 1;
        if (!H.empty()) H.back() = 1;
    }
}

void hensel_tree(const ZPoly& f, const std::vector<PPoly>& factors, std::size_t lo,
                 std::size_t hi, const Integer& p, unsigned k, const Integer& pk,
                 std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        ZPoly g = f;
        modnorm(g, pk);
        out.push_back(std::move(g));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    PPoly left{Integer(1)}, right{Integer(1)};
    for (std::size_t i = lo; i < mid; ++i) left = pmul(left, factors[i], p);
    for (std::size_t i = mid; i < hi; ++i) right = pmul(right, factors[i], p);
    ZPoly G, H;
    hensel_pair_lift(f, left, right, p, k, G, H);
    hensel_tree(G, factors, lo, mid, p, k, pk, out);
    hensel_tree(H, factors, mid, hi, p, k, pk, out);
}

// ---------- Zassenhaus recombination ----------

void symmetrize(ZPoly& f, const Integer& pk) {
    Integer half = pk / 2;
    for (auto& c : f) {
        c %= pk;
        if (c < 0) c += pk;
        if (c > half) c -= pk;
    }
    znorm(f);
}

// Monic squarefree G -> monic irreducible integer factors.
std::vector<ZPoly> zassenhaus_monic(const ZPoly& G) {
    const int n = zdeg(G);
    std::vector<ZPoly> result;
    if (n == 1) {
        result.push_back(G);
        return result;
    }

    static const unsigned long small_primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                                 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                                 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
    std::vector<PPoly> best_factors;
    Integer best_p(0);
    int tried = 0;
    Integer candidate_p(2);
    for (std::size_t pi = 0; tried < 4; ++pi) {
        Integer p;
        if (pi < std::size(small_primes)) {
            p = Integer(small_primes[pi]);
        } else {
            mpz_nextprime(candidate_p.get_mpz_t(), candidate_p.get_mpz_t());
            if (candidate_p <= Integer(small_primes[std::size(small_primes) - 1])) continue;
            p = candidate_p;
        }
        PPoly fp = preduce(G, p);
        if (zdeg(fp) != n) continue; // p divides lc (monic: impossible, kept for safety)
        PPoly fpd = preduce(zderiv(G), p);
        if (zdeg(pgcd(fp, fpd, p)) != 0) continue; // not squarefree mod p
        ++tried;
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        auto factors = factor_mod_p(pmonic(fp, p), p, rng);
        if (best_factors.empty() || factors.size() < best_factors.size()) {
            best_factors = std::move(factors);
            best_p = p;
        }
        if (best_factors.size() <= 2) break;
    }
    if (best_factors.empty()) throw Error("internal: no usable prime for factorization");
    if (best_factors.size() == 1) {
        result.push_back(G);
        return result;
    }

    // Landau-Mignotte style bound: any monic factor g has
    // |coeff(g)| <= 2^(n-1) * ||G||_2.
    Integer norm_sq(0);
    for (const auto& c : G) norm_sq += c * c;
    Integer norm2;
    mpz_sqrt(norm2.get_mpz_t(), norm_sq.get_mpz_t());
    norm2 += 1;
    Integer bound = norm2;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    Integer pk(1);
    unsigned k = 0;
    while (pk <= 2 * bound) {
        pk *= best_p;
        ++k;
    }

    std::vector<ZPoly> lifted;
    hensel_tree(G, best_factors, 0, best_factors.size(), best_p, k, pk, lifted);

    if (lifted.size() > 28)
        throw ResourceError("factor recombination has too many modular factors");

    ZPoly rest = G;
    std::vector<ZPoly> pool = lifted;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand{Integer(1)};
            for (std::size_t i : idx) {
                cand = zmul(cand, pool[i]);
                modnorm(cand, pk);
            }
            symmetrize(cand, pk);
            ZPoly quotient;
            if (!cand.empty() && zdivide_exact(rest, cand, quotient)) {
                result.push_back(cand);
                rest = quotient;
                std::vector<ZPoly> next;
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
            // next combination
            std::size_t i = size;
            while (i-- > 0) {
                if (idx[i] + (size - i) < pool.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto combos_done;
            }
            continue;
        combos_done:
            break;
        }
        if (!found) ++size;
    }
    if (zdeg(rest) > 0) result.push_back(rest);
    return result;
}

} // namespace

std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
    const int n = zdeg(f);
    if (n < 1) throw InvalidArgument("factoring a constant");
    if (n == 1) return {f};

    const Integer L = f.back();
    if (L == 1) return zassenhaus_monic(f);

    // Monic transform G(x) = L^(n-1) * f(x/L); factors map back through
    // primitive_part(g(L*x)).
    ZPoly G(f.size());
    Integer scale(1);
    for (int i = n; i >= 0; --i) {
        G[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * scale;
        if (i > 0) scale *= L;
    }
    auto monic_factors = zassenhaus_monic(G);
    std::vector<ZPoly> out;
    out.reserve(monic_factors.size());
    for (const auto& g : monic_factors) {
        ZPoly mapped = g;
        Integer power(1);
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            mapped[i] *= power;
            power *= L;
        }
        out.push_back(zprimitive(mapped));
    }
    return out;
}

} // namespace locus::detail
