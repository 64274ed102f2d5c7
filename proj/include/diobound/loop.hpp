#ifndef DIOBOUND_LOOP_HPP
#define DIOBOUND_LOOP_HPP

// Bounded replica of the endless confirmation loop. Starting from
// X = (-5, -5), every candidate gets a witness scan from the bottom of
// the next shell; the candidate and the found pair are printed exactly
// when the candidate satisfies some relation; when a dimension's window
// 2^(2^n) is exhausted the dimension number itself is printed and the
// scan restarts one dimension higher at (-1-2^(2^n), ...). The original
// never terminates; the single deviation here is the step budget, which
// ends the stream with a truncation marker carrying the resumable state.

#include <cstdint>
#include <functional>

#include "diobound/order.hpp"
#include "diobound/relations.hpp"
#include "diobound/witness.hpp"

namespace diobound {

struct SweepEvent {
    enum class Kind { candidate, witness_pair, dimension, truncated };
    Kind kind;
    Tuple<BigInt> x;
    Tuple<BigInt> y;                   // witness_pair: the found tuple; truncated: scan position
    unsigned n = 0;                    // dimension events
    std::uint64_t tuples_advanced = 0; // dimension and truncated events
    std::uint64_t steps_used = 0;      // witness_pair: scan steps for this candidate;
                                       // truncated: total steps consumed
};

inline void run_sweep(std::uint64_t max_steps, const std::function<void(const SweepEvent&)>& emit) {
    if (max_steps == 0) throw contract_violation("sweep needs a positive step budget");

    unsigned n = 2;
    Tuple<BigInt> x(n, BigInt(-5));
    BigInt window = shell_upper(n);
    std::uint64_t total_steps = 0;
    std::uint64_t advanced = 0;

    while (true) {
        const std::vector<Equation> sig = add_mul_signature(x);
        const bool printable = !sig.empty();
        if (printable) emit(SweepEvent{SweepEvent::Kind::candidate, x, {}, n, advanced, 0});

        Tuple<BigInt> b = shell_first(x.size(), BigInt(max_norm(x) + 1));
        std::uint64_t scan_steps = 0;
        while (true) {
            if (total_steps == max_steps) {
                emit(SweepEvent{SweepEvent::Kind::truncated, x, b, n, advanced, total_steps});
                return;
            }
            ++total_steps;
            ++scan_steps;
            if (detail::signature_holds(sig, b)) break;
            successor_in_place(b);
        }
        if (printable)
            emit(SweepEvent{SweepEvent::Kind::witness_pair, x, b, n, advanced, scan_steps});

        successor_in_place(x);
        ++advanced;
        if (max_norm(x) > window) {
            emit(SweepEvent{SweepEvent::Kind::dimension, {}, {}, n, advanced, 0});
            ++n;
            window = shell_upper(n);
            x.assign(n, BigInt(-1) - shell_upper(n - 1));
        }
    }
}

} // namespace diobound

#endif
