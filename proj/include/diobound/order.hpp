#ifndef DIOBOUND_ORDER_HPP
#define DIOBOUND_ORDER_HPP

// The total order on Z^n that ranks tuples by max-norm first and breaks
// ties colexicographically (last coordinate most significant). The
// successor function advances a tuple to the unique next position and is
// the bit-exact engine behind every exhaustive scan here: within a norm
// shell it sweeps coordinate 1 fastest, and when a shell is exhausted it
// restarts at (-b-1, ..., -b-1).

#include <compare>

#include "diobound/tuples.hpp"

namespace diobound {

template <IntegerLike I>
inline std::strong_ordering order_cmp(const Tuple<I>& a, const Tuple<I>& b) {
    if (a.size() != b.size())
        throw contract_violation("order_cmp on tuples of different length");
    const I na = max_norm(a), nb = max_norm(b);
    if (na != nb) return na < nb ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t idx = a.size(); idx-- > 0;) {
        if (a[idx] != b[idx])
            return a[idx] < b[idx] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// Case split: b = max-norm, q = 1 + length of the maximal prefix of
// coordinates equal to +b, w = max-norm of coordinates 2..n.
//   q = 1, w < b : flip coordinate 1 from -b to +b
//   q = 1, w = b : bump coordinate 1
//   1 < q <= n   : reset prefix to -b, bump coordinate q
//   q = n + 1    : shell exhausted, restart at (-b-1, ..., -b-1)
template <IntegerLike I>
inline void successor_in_place(Tuple<I>& t) {
    const std::size_t n = t.size();
    if (n == 0) throw contract_violation("successor of empty tuple");
    const I b = max_norm(t);
    I w = 0;
    for (std::size_t idx = 1; idx < n; ++idx) {
        I a = abs_of(t[idx]);
        if (a > w) w = a;
    }
    std::size_t q = 0;
    while (q < n && t[q] == b) ++q;
    // q is now the 0-based index of the first coordinate != +b (or n).
    if (q == 0) {
        if (w < b) {
            t[0] = b;
        } else {
            t[0] += 1;
        }
    } else if (q < n) {
        for (std::size_t u = 0; u < q; ++u) t[u] = -b;
        t[q] += 1;
    } else {
        const I nb = -(b + 1);
        for (std::size_t u = 0; u < n; ++u) t[u] = nb;
    }
}

template <IntegerLike I>
inline Tuple<I> successor(Tuple<I> t) {
    successor_in_place(t);
    return t;
}

// The least tuple of max-norm b: (-b, ..., -b).
template <IntegerLike I>
inline Tuple<I> shell_first(std::size_t n, const I& b) {
    return Tuple<I>(n, -b);
}

// Number of tuples of max-norm exactly b in Z^n: (2b+1)^n - (2b-1)^n.
inline BigInt shell_size(unsigned n, const BigInt& b) {
    if (b == 0) return 1;
    BigInt outer, inner;
    mpz_pow_ui(outer.get_mpz_t(), BigInt(2 * b + 1).get_mpz_t(), n);
    mpz_pow_ui(inner.get_mpz_t(), BigInt(2 * b - 1).get_mpz_t(), n);
    return outer - inner;
}

} // namespace diobound

#endif
