#ifndef DIOBOUND_CANDIDATES_HPP
#define DIOBOUND_CANDIDATES_HPP

// Candidate streams for the bounded statements: all tuples whose max-norm
// lies in a window (lo, hi], visited in the global enumeration order.
// Two engines produce the stream. The restricted engine generates only
// tuples with |x1| >= ... >= |xn| (and optionally pairwise distinct
// coordinates) directly from nested abs-bounded loops, which keeps the
// visit count proportional to the restricted set. The code-faithful
// engine walks the full shells with the successor function.

#include <vector>

#include "diobound/order.hpp"
#include "diobound/tuples.hpp"

namespace diobound {

template <IntegerLike I>
struct CandidateFilter {
    unsigned n = 1;
    I x1_abs_min = 0; // exclusive
    I x1_abs_max = 0; // inclusive
    bool require_distinct = true;
    bool require_descending_abs = true;
};

namespace detail {

template <IntegerLike I, class Fn>
void descending_shell_scan(unsigned n, const I& v, bool distinct, Fn&& emit) {
    Tuple<I> t(n, I(0));
    // Assign coordinate n first (colex-most-significant), coordinate 1 last.
    auto rec = [&](auto&& self, std::size_t pos, const I& min_abs) -> void {
        if (pos == 0) {
            for (int s = 0; s < 2; ++s) {
                if (s == 1 && v == 0) break;
                I val = s == 0 ? I(-v) : v;
                if (distinct) {
                    bool dup = false;
                    for (std::size_t q = 1; q < t.size(); ++q)
                        if (t[q] == val) { dup = true; break; }
                    if (dup) continue;
                }
                t[0] = val;
                emit(t);
            }
            return;
        }
        auto try_val = [&](const I& val) {
            if (distinct) {
                for (std::size_t q = pos + 1; q < t.size(); ++q)
                    if (t[q] == val) return;
            }
            t[pos] = val;
            self(self, pos - 1, abs_of(val));
        };
        if (min_abs == 0) {
            for (I val = -v; val <= v; val += 1) try_val(val);
        } else {
            for (I val = -v; val <= -min_abs; val += 1) try_val(val);
            for (I val = min_abs; val <= v; val += 1) try_val(val);
        }
    };
    rec(rec, n - 1, I(0));
}

template <IntegerLike I, class Fn>
void full_shell_scan(unsigned n, const I& v, bool distinct, Fn&& emit) {
    Tuple<I> t = shell_first(static_cast<std::size_t>(n), v);
    while (true) {
        if (!distinct || pairwise_distinct(t)) emit(t);
        successor_in_place(t);
        if (max_norm(t) > v) return;
    }
}

} // namespace detail

// All candidates of max-norm exactly v admitted by the filter, in
// enumeration order.
template <IntegerLike I, class Fn>
void for_each_candidate_in_shell(const CandidateFilter<I>& f, const I& v, Fn&& emit) {
    if (f.require_descending_abs)
        detail::descending_shell_scan(f.n, v, f.require_distinct, emit);
    else
        detail::full_shell_scan(f.n, v, f.require_distinct, emit);
}

template <IntegerLike I, class Fn>
void for_each_candidate(const CandidateFilter<I>& f, Fn&& emit) {
    for (I v = f.x1_abs_min + 1; v <= f.x1_abs_max; v += 1)
        for_each_candidate_in_shell(f, v, emit);
}

template <IntegerLike I>
std::vector<Tuple<I>> collect_candidates(const CandidateFilter<I>& f) {
    std::vector<Tuple<I>> out;
    for_each_candidate(f, [&](const Tuple<I>& t) { out.push_back(t); });
    return out;
}

} // namespace diobound

#endif
