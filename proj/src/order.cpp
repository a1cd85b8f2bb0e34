#include "locus/order.hpp"

#include "locus/errors.hpp"

#include <algorithm>

namespace locus {

MonomialOrder MonomialOrder::lex(std::size_t n) {
    MonomialOrder o(Kind::Lex, n);
    o.priority_.resize(n);
    for (std::size_t i = 0; i < n; ++i) o.priority_[i] = static_cast<int>(i);
    return o;
}

MonomialOrder MonomialOrder::lex_permuted(std::vector<int> priority) {
    std::vector<char> seen(priority.size(), 0);
    for (int v : priority) {
        if (v < 0 || static_cast<std::size_t>(v) >= priority.size() || seen[v])
            throw InvalidArgument("lex order priority is not a permutation");
        seen[v] = 1;
    }
    MonomialOrder o(Kind::Lex, priority.size());
    o.priority_ = std::move(priority);
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
    return MonomialOrder(Kind::GrevLex, n);
}

MonomialOrder MonomialOrder::block(const std::vector<int>& front, std::size_t n) {
    MonomialOrder o(Kind::Block, n);
    o.in_front_.assign(n, 0);
    for (int v : front) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || o.in_front_[v])
            throw InvalidArgument("block order front set is not a variable subset");
        o.in_front_[v] = 1;
    }
    o.front_ = front;
    std::sort(o.front_.begin(), o.front_.end());
    return o;
}

namespace {

// grevlex restricted to the variables selected by mask (or all when empty).
int masked_grevlex(const Monomial& a, const Monomial& b, const std::vector<char>& mask,
                   bool want_front) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (static_cast<bool>(mask[i]) != want_front) continue;
        da += a.exps[i];
        db += b.exps[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (static_cast<bool>(mask[i]) != want_front) continue;
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != n_ || b.size() != n_)
        throw InvalidArgument("monomial size does not match order context size");
    switch (kind_) {
    case Kind::Lex:
        for (int v : priority_) {
            auto i = static_cast<std::size_t>(v);
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
        }
        return 0;
    case Kind::GrevLex:
        return grevlex_compare(a, b);
    case Kind::Block:
        if (int c = masked_grevlex(a, b, in_front_, true)) return c;
        return masked_grevlex(a, b, in_front_, false);
    }
    return 0;
}

} // namespace locus
