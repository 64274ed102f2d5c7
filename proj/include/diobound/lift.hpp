#ifndef DIOBOUND_LIFT_HPP
#define DIOBOUND_LIFT_HPP

// Dimension lifts that transport counterexamples upward. Both preserve
// the relation structure of the input in the sense checked by
// witness_valid: every relation of x maps to a relation of the lift.

#include "diobound/tuples.hpp"

namespace diobound {

// (x1, ..., x1 [m-n+1 copies], x2, ..., xn): stretches an n-tuple to
// dimension m >= n by repeating the lead coordinate.
template <IntegerLike I>
inline Tuple<I> lift_to_dimension(const Tuple<I>& x, unsigned m) {
    const unsigned n = static_cast<unsigned>(x.size());
    if (n == 0) throw contract_violation("lift of empty tuple");
    if (m < n) throw contract_violation("lift target dimension must be >= tuple length");
    Tuple<I> out;
    out.reserve(m);
    for (unsigned c = 0; c < m - n + 1; ++c) out.push_back(x[0]);
    for (unsigned idx = 1; idx < n; ++idx) out.push_back(x[idx]);
    return out;
}

// (x1^2, x1, x2, ..., xn): one dimension up, squaring the lead
// coordinate. When 2^(2^(n-1)) < |x1| = max-norm(x) <= 2^(2^n), the
// output satisfies the same window one level higher.
template <IntegerLike I>
inline Tuple<I> square_extend(const Tuple<I>& x) {
    if (x.empty()) throw contract_violation("square_extend of empty tuple");
    Tuple<I> out;
    out.reserve(x.size() + 1);
    out.push_back(I(x[0] * x[0]));
    for (const I& v : x) out.push_back(v);
    return out;
}

} // namespace diobound

#endif
