#pragma once

#include "locus/monomial.hpp"

#include <vector>

namespace locus {

// Monomial order over a fixed context size. Three variants:
//   Lex      — lexicographic along a priority permutation of the variables.
//   GrevLex  — graded reverse lexicographic over the context order.
//   Block    — elimination order: front block compared grevlex first, then
//              the back block; any monomial containing a front variable
//              exceeds every monomial free of them.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Block };

    static MonomialOrder lex(std::size_t n);
    static MonomialOrder lex_permuted(std::vector<int> priority);
    static MonomialOrder grevlex(std::size_t n);
    static MonomialOrder block(const std::vector<int>& front, std::size_t n);

    Kind kind() const { return kind_; }
    std::size_t context_size() const { return n_; }
    const std::vector<int>& front_block() const { return front_; }

    // <0 when a is smaller, 0 on equal, >0 when a is larger.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Strict-weak-order functor for descending sorts.
    struct Desc {
        const MonomialOrder* order;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return order->compare(a, b) > 0;
        }
    };
    Desc desc() const { return Desc{this}; }

private:
    MonomialOrder(Kind kind, std::size_t n) : kind_(kind), n_(n) {}

    Kind kind_;
    std::size_t n_ = 0;
    std::vector<int> priority_;  // Lex: variable indices, most significant first
    std::vector<int> front_;     // Block: front (eliminated) variable indices
    std::vector<char> in_front_; // Block: membership mask
};

} // namespace locus
