#ifndef DIOBOUND_RELATIONS_HPP
#define DIOBOUND_RELATIONS_HPP

// Satisfaction checks and the basic constructions on relation systems:
// the maximal system of a tuple, the unit-elimination transform, and the
// extremal doubling/squaring chain.

#include <vector>

#include "diobound/equation.hpp"
#include "diobound/tuples.hpp"

namespace diobound {

template <IntegerLike I>
inline bool holds(const Equation& e, const Tuple<I>& t) {
    switch (e.kind) {
    case EqKind::Unit:
        return t[e.i - 1] == 1;
    case EqKind::Add:
        return t[e.i - 1] + t[e.j - 1] == t[e.k - 1];
    default:
        return t[e.i - 1] * t[e.j - 1] == t[e.k - 1];
    }
}

template <IntegerLike I>
inline bool is_solution(const Tuple<I>& t, const System& s) {
    if (t.size() != s.n())
        throw contract_violation("tuple length " + std::to_string(t.size()) +
                                 " does not match system dimension " + std::to_string(s.n()));
    for (const Equation& e : s.equations())
        if (!holds(e, t)) return false;
    return true;
}

// Every Add/Mul relation the tuple satisfies, normalized i <= j. This is
// the part of the maximal system a witness has to preserve; unit
// equations are deliberately left out.
template <IntegerLike I>
inline std::vector<Equation> add_mul_signature(const Tuple<I>& t) {
    const unsigned n = static_cast<unsigned>(t.size());
    std::vector<Equation> eqs;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j <= n; ++j) {
            const I sum = t[i - 1] + t[j - 1];
            const I prod = t[i - 1] * t[j - 1];
            for (unsigned k = 1; k <= n; ++k) {
                if (sum == t[k - 1]) eqs.push_back(add(i, j, k));
                if (prod == t[k - 1]) eqs.push_back(mul(i, j, k));
            }
        }
    }
    std::sort(eqs.begin(), eqs.end());
    return eqs;
}

template <IntegerLike I>
inline bool has_any_add_mul_relation(const Tuple<I>& t) {
    const unsigned n = static_cast<unsigned>(t.size());
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j <= n; ++j) {
            const I sum = t[i - 1] + t[j - 1];
            const I prod = t[i - 1] * t[j - 1];
            for (unsigned k = 1; k <= n; ++k)
                if (sum == t[k - 1] || prod == t[k - 1]) return true;
        }
    }
    return false;
}

// The maximal system satisfied by t: every unit, additive and
// multiplicative relation that holds for t. Any system solved by t is a
// subset of this one.
template <IntegerLike I>
inline System canonical_system(const Tuple<I>& t) {
    const unsigned n = static_cast<unsigned>(t.size());
    std::vector<Equation> eqs = add_mul_signature(t);
    for (unsigned i = 1; i <= n; ++i)
        if (t[i - 1] == 1) eqs.push_back(unit(i));
    return System(n, std::move(eqs));
}

// Remove every unit equation x_i = 1 and replace it by the n equations
// x_i * x_j = x_j (j = 1..n). The transform adds exactly the zero tuple
// to the solution set.
inline System tilde_transform(const System& s) {
    std::vector<Equation> eqs;
    for (const Equation& e : s.equations()) {
        if (e.kind == EqKind::Unit) {
            for (unsigned j = 1; j <= s.n(); ++j) eqs.push_back(mul(e.i, j, j));
        } else {
            eqs.push_back(e);
        }
    }
    return System(s.n(), std::move(eqs));
}

// { x1+x1=x2, x1*x1=x2, x2*x2=x3, ..., x_{n-1}*x_{n-1}=x_n }: the system
// showing the doubly exponential bound is tight. Its only integer
// solutions are the zero tuple and (2, 4, 16, ..., 2^(2^(n-1))).
inline System chain_system(unsigned n) {
    if (n < 2) throw contract_violation("chain system needs n >= 2");
    std::vector<Equation> eqs{add(1, 1, 2), mul(1, 1, 2)};
    for (unsigned i = 2; i < n; ++i) eqs.push_back(mul(i, i, i + 1));
    return System(n, std::move(eqs));
}

// (2, 4, 16, 256, ...): coordinate i is 2^(2^(i-1)).
template <IntegerLike I>
inline Tuple<I> chain_tuple(unsigned n) {
    Tuple<I> t;
    t.reserve(n);
    for (unsigned i = 1; i <= n; ++i) t.push_back(pow2<I>(1u << (i - 1)));
    return t;
}

} // namespace diobound

#endif
