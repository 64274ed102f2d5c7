#ifndef DIOBOUND_CATALOG_HPP
#define DIOBOUND_CATALOG_HPP

// Membership in T_n: a tuple belongs iff some system it solves has only
// finitely many integer solutions, and any such system is contained in
// the tuple's canonical maximal system, so it suffices to probe that one.
// A solution above 2^(2^(n-1)) found inside the probe box disproves
// membership; finding none is taken as finiteness evidence, which is
// sound for n <= 3 where the bound is a theorem. Dimensions above 3 are
// rejected outright.

#include <vector>

#include "diobound/concurrency.hpp"
#include "diobound/relations.hpp"
#include "diobound/solve.hpp"

namespace diobound {

template <IntegerLike I>
struct MembershipVerdict {
    Tuple<I> tuple;
    bool in_tn = false;
    System canonical;
    // complete probe-box solution set when in_tn; otherwise the violating
    // solution that disproved membership
    std::vector<Tuple<I>> solutions_found;
    I probe_radius = 0;
};

template <IntegerLike I>
inline MembershipVerdict<I> membership(const Tuple<I>& a, const I& probe_radius,
                                       SolveLimits limits = {}) {
    const unsigned n = static_cast<unsigned>(a.size());
    if (n == 0) throw contract_violation("membership of empty tuple");
    if (n > 3) throw unsupported_dimension("membership is only decided for n <= 3");
    const I bound = from_bigint<I>(shell_lower(n));
    if (probe_radius < bound)
        throw contract_violation("probe radius must be at least 2^(2^(n-1))");

    MembershipVerdict<I> v;
    v.tuple = a;
    v.canonical = canonical_system(a);
    v.probe_radius = probe_radius;
    if (auto violator = find_solution_above(v.canonical, probe_radius, bound, limits)) {
        v.in_tn = false;
        v.solutions_found.push_back(std::move(*violator));
    } else {
        v.in_tn = true;
        v.solutions_found = solutions_in_box(v.canonical, probe_radius, limits);
    }
    return v;
}

// All members of T_n, in enumeration order. The candidate universe is the
// box of radius 2^(2^(n-1)): members solve their own finite-solution
// systems, so they obey the bound.
template <IntegerLike I>
inline std::vector<Tuple<I>> catalog(unsigned n, const I& probe_radius, unsigned workers = 1,
                                     SolveLimits limits = {}) {
    if (n == 0 || n > 3) throw unsupported_dimension("catalog is only computed for n <= 3");
    const I radius = from_bigint<I>(shell_lower(n));
    const long span = static_cast<long>(from_bigint<std::int64_t>(to_bigint(radius)));

    auto task = [&](std::size_t idx) -> std::vector<Tuple<I>> {
        std::vector<Tuple<I>> members;
        Tuple<I> t(n, I(0));
        t[0] = I(static_cast<long>(idx) - span);
        // odometer over the remaining coordinates
        for (std::size_t c = 1; c < n; ++c) t[c] = -radius;
        while (true) {
            if (membership(t, probe_radius, limits).in_tn) members.push_back(t);
            std::size_t c = 1;
            while (c < n && t[c] == radius) t[c++] = -radius;
            if (c >= n) break;
            t[c] += 1;
        }
        return members;
    };

    std::vector<Tuple<I>> all;
    run_ordered<std::vector<Tuple<I>>>(
        static_cast<std::size_t>(2 * span + 1), workers,
        task,
        [&](std::size_t, std::vector<Tuple<I>>&& members) {
            for (auto& m : members) all.push_back(std::move(m));
            return true;
        });
    std::sort(all.begin(), all.end(),
              [](const Tuple<I>& a, const Tuple<I>& b) { return order_cmp(a, b) < 0; });
    return all;
}

template <IntegerLike I>
inline std::vector<Tuple<I>> catalog(unsigned n, unsigned workers = 1) {
    if (n == 0 || n > 3) throw unsupported_dimension("catalog is only computed for n <= 3");
    return catalog<I>(n, from_bigint<I>(shell_upper(n)), workers);
}

} // namespace diobound

#endif
