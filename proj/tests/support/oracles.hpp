#ifndef DIOBOUND_TEST_ORACLES_HPP
#define DIOBOUND_TEST_ORACLES_HPP

// Test-side reference implementations, kept deliberately naive and
// independent of the library's search paths.

#include <algorithm>
#include <random>
#include <vector>

#include "diobound/equation.hpp"
#include "diobound/order.hpp"
#include "diobound/relations.hpp"
#include "diobound/tuples.hpp"

namespace oracle {

using diobound::BigInt;
using diobound::Equation;
using diobound::System;
using diobound::Tuple;

// Plain nested-loop enumeration of every tuple in the box, checking each
// equation by direct arithmetic. No propagation, no pruning.
template <diobound::IntegerLike I>
inline std::vector<Tuple<I>> naive_solutions(const System& s, long radius) {
    std::vector<Tuple<I>> out;
    Tuple<I> t(s.n(), I(-radius));
    while (true) {
        bool ok = true;
        for (const Equation& e : s.equations()) {
            if (e.kind == diobound::EqKind::Unit) {
                if (t[e.i - 1] != 1) ok = false;
            } else if (e.kind == diobound::EqKind::Add) {
                if (t[e.i - 1] + t[e.j - 1] != t[e.k - 1]) ok = false;
            } else {
                if (t[e.i - 1] * t[e.j - 1] != t[e.k - 1]) ok = false;
            }
            if (!ok) break;
        }
        if (ok) out.push_back(t);
        std::size_t idx = 0;
        while (idx < t.size()) {
            if (t[idx] < radius) {
                t[idx] += 1;
                break;
            }
            t[idx] = I(-radius);
            ++idx;
        }
        if (idx == t.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Tuple<I>& a, const Tuple<I>& b) {
        return diobound::order_cmp(a, b) < 0;
    });
    return out;
}

// Every tuple of Z^n with max-norm <= bound, sorted by the library order.
template <diobound::IntegerLike I>
inline std::vector<Tuple<I>> sorted_ball(unsigned n, long bound) {
    System empty(n, {});
    return naive_solutions<I>(empty, bound);
}

// Independent witness check: walks every ordered index triple rather than
// the normalized i <= j form the library uses.
template <diobound::IntegerLike I>
inline bool check_witness(const Tuple<I>& x, const Tuple<I>& y, const I& threshold) {
    if (x.size() != y.size()) return false;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (x[i] + x[j] == x[k] && y[i] + y[j] != y[k]) return false;
                if (x[i] * x[j] == x[k] && y[i] * y[j] != y[k]) return false;
            }
    I m = 0;
    for (const I& v : y) {
        I a = v < 0 ? I(-v) : v;
        if (a > m) m = a;
    }
    return m > threshold;
}

// Uniformly random subset of the dimension-n equation universe; each
// equation kept with probability num/den.
inline System random_system(unsigned n, std::mt19937_64& rng, unsigned num = 1, unsigned den = 6) {
    std::vector<Equation> eqs;
    auto keep = [&] { return rng() % den < num; };
    for (unsigned i = 1; i <= n; ++i)
        if (keep()) eqs.push_back(diobound::unit(i));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (keep()) eqs.push_back(diobound::add(i, j, k));
                if (keep()) eqs.push_back(diobound::mul(i, j, k));
            }
    return System(n, std::move(eqs));
}

template <diobound::IntegerLike I>
inline Tuple<I> random_tuple(unsigned n, long radius, std::mt19937_64& rng) {
    Tuple<I> t;
    t.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        t.push_back(I(static_cast<long>(rng() % (2 * radius + 1)) - radius));
    return t;
}

} // namespace oracle

#endif
