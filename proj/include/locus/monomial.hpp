#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace locus {

// Exponent vector, one entry per context variable.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps[i]; }

    std::uint64_t total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }

    bool is_one() const {
        for (auto e : exps)
            if (e) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i)
            r.exps[i] = exps[i] + other.exps[i];
        return r;
    }

    // Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const {
        Monomial r(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i)
            r.exps[i] = exps[i] - other.exps[i];
        return r;
    }

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool operator!=(const Monomial& other) const { return exps != other.exps; }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exps.size());
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            r.exps[i] = a.exps[i] > b.exps[i] ? a.exps[i] : b.exps[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] && b.exps[i]) return false;
        return true;
    }
};

// Graded reverse lexicographic comparison over the context variable order:
// higher total degree wins; on ties the smaller exponent in the last
// differing variable wins. Returns <0, 0, >0.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    }
    return 0;
}

// Canonical storage comparator: grevlex-descending, so map iteration starts
// at the display leading term.
struct MonomialStoreLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_compare(a, b) > 0;
    }
};

} // namespace locus
