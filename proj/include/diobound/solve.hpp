#ifndef DIOBOUND_SOLVE_HPP
#define DIOBOUND_SOLVE_HPP

// Exhaustive solution search over a box, with constraint propagation.
// Variables forced by an equation with enough operands known (including
// the index-coincidence patterns like x_i + x_j = x_i, which pin x_j = 0
// outright) are assigned without enumeration; square roots and x^2 = x
// give two-candidate branches; everything else falls back to scanning the
// variable's range. On chain-like systems the search degenerates to one
// enumerated coordinate; on an empty system it is the plain nested loop.

#include <cstdint>
#include <optional>
#include <vector>

#include "diobound/equation.hpp"
#include "diobound/order.hpp"
#include "diobound/relations.hpp"
#include "diobound/tuples.hpp"

namespace diobound {

struct SolveLimits {
    std::uint64_t max_nodes = 100'000'000;
    std::uint64_t max_results = 1'000'000;
};

namespace detail {

template <IntegerLike I>
inline std::optional<I> exact_div(const I& num, const I& den) {
    if (den == 0) return std::nullopt;
    if constexpr (std::same_as<I, BigInt>) {
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
        BigInt q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    } else {
        if (num % den != 0) return std::nullopt;
        return I(num / den);
    }
}

// Exact non-negative square root, or nullopt if the input is negative or
// not a perfect square.
template <IntegerLike I>
inline std::optional<I> exact_sqrt(const I& v) {
    if (v < 0) return std::nullopt;
    if constexpr (std::same_as<I, BigInt>) {
        if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
        return r;
    } else {
        if (v == 0) return I(0);
        I lo = 1, hi = v < 4 ? v : v / 2 + 1;
        while (lo < hi) {
            I mid = lo + (hi - lo + 1) / 2;
            if (mid <= v / mid)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo * lo == v ? std::optional<I>(lo) : std::nullopt;
    }
}

template <IntegerLike I>
class BoxSearch {
public:
    BoxSearch(const System& s, std::vector<I> radii, SolveLimits limits)
        : sys_(s), radii_(std::move(radii)), lim_(limits) {
        if (radii_.size() != sys_.n())
            throw contract_violation("radius vector length does not match system dimension");
        for (const I& r : radii_)
            if (r < 0) throw contract_violation("box radius must be non-negative");
        val_.assign(sys_.n(), I(0));
        set_.assign(sys_.n(), 0);
    }

    // emit returns false to stop the search early.
    template <class Emit>
    void run(Emit&& emit) {
        nodes_ = 0;
        dfs(emit);
    }

    std::uint64_t nodes_used() const { return nodes_; }

private:
    const System& sys_;
    std::vector<I> radii_;
    SolveLimits lim_;
    std::vector<I> val_;
    std::vector<char> set_;
    std::uint64_t nodes_ = 0;
    std::size_t assigned_ = 0;

    void tick() {
        if (++nodes_ > lim_.max_nodes)
            throw budget_exceeded("box search exceeded " + std::to_string(lim_.max_nodes) +
                                  " nodes");
    }

    // Assign v to variable idx (0-based); false on contradiction.
    bool put(std::size_t idx, const I& v, std::vector<std::size_t>& trail) {
        if (set_[idx]) return val_[idx] == v;
        if (abs_of(v) > radii_[idx]) return false;
        tick();
        val_[idx] = v;
        set_[idx] = 1;
        ++assigned_;
        trail.push_back(idx);
        return true;
    }

    void undo(const std::vector<std::size_t>& trail) {
        for (std::size_t idx : trail) {
            set_[idx] = 0;
            --assigned_;
        }
    }

    // One forcing pass over the equations; true if anything new was
    // assigned, conflict reported through `ok`.
    bool force_pass(std::vector<std::size_t>& trail, bool& ok) {
        bool changed = false;
        for (const Equation& e : sys_.equations()) {
            const std::size_t i = e.i - 1, j = e.kind == EqKind::Unit ? 0 : e.j - 1,
                              k = e.kind == EqKind::Unit ? 0 : e.k - 1;
            switch (e.kind) {
            case EqKind::Unit:
                if (!set_[i]) {
                    if (!put(i, I(1), trail)) { ok = false; return changed; }
                    changed = true;
                }
                break;
            case EqKind::Add:
                if (i == j && j == k) {
                    if (!set_[i]) {
                        if (!put(i, I(0), trail)) { ok = false; return changed; }
                        changed = true;
                    }
                } else if (k == i || k == j) {
                    // x_i + x_j = x_i pins the other operand to zero.
                    const std::size_t other = k == i ? j : i;
                    if (!set_[other]) {
                        if (!put(other, I(0), trail)) { ok = false; return changed; }
                        changed = true;
                    }
                } else if (i == j) {
                    if (set_[i] && !set_[k]) {
                        if (!put(k, I(val_[i] + val_[i]), trail)) { ok = false; return changed; }
                        changed = true;
                    } else if (!set_[i] && set_[k]) {
                        auto half = exact_div(val_[k], I(2));
                        if (!half) { ok = false; return changed; }
                        if (!put(i, *half, trail)) { ok = false; return changed; }
                        changed = true;
                    }
                } else {
                    const int known = (set_[i] ? 1 : 0) + (set_[j] ? 1 : 0) + (set_[k] ? 1 : 0);
                    if (known == 2) {
                        bool good = true;
                        if (!set_[k])
                            good = put(k, I(val_[i] + val_[j]), trail);
                        else if (!set_[j])
                            good = put(j, I(val_[k] - val_[i]), trail);
                        else
                            good = put(i, I(val_[k] - val_[j]), trail);
                        if (!good) { ok = false; return changed; }
                        changed = true;
                    }
                }
                break;
            case EqKind::Mul:
                if (i == j && j == k) {
                    if (set_[i] && !(val_[i] == 0 || val_[i] == 1)) { ok = false; return changed; }
                } else if (i == j) {
                    // x_i^2 = x_k
                    if (set_[i] && !set_[k]) {
                        if (!put(k, I(val_[i] * val_[i]), trail)) { ok = false; return changed; }
                        changed = true;
                    } else if (!set_[i] && set_[k]) {
                        auto root = exact_sqrt(val_[k]);
                        if (!root) { ok = false; return changed; }
                        if (*root == 0) {
                            if (!put(i, I(0), trail)) { ok = false; return changed; }
                            changed = true;
                        }
                        // nonzero roots branch at the choice point
                    }
                } else if (k == i || k == j) {
                    // x_i * x_j = x_i: either x_i = 0 or x_j = 1.
                    const std::size_t self = k, other = k == i ? j : i;
                    if (set_[self] && val_[self] != 0 && !set_[other]) {
                        if (!put(other, I(1), trail)) { ok = false; return changed; }
                        changed = true;
                    } else if (set_[other] && val_[other] != 1 && !set_[self]) {
                        if (!put(self, I(0), trail)) { ok = false; return changed; }
                        changed = true;
                    }
                } else {
                    if (set_[i] && set_[j] && !set_[k]) {
                        if (!put(k, I(val_[i] * val_[j]), trail)) { ok = false; return changed; }
                        changed = true;
                    } else if (set_[k]) {
                        // one factor known, the other open
                        for (int pass = 0; pass < 2; ++pass) {
                            const std::size_t a = pass == 0 ? i : j, b = pass == 0 ? j : i;
                            if (!set_[a] || set_[b]) continue;
                            if (val_[a] == 0) {
                                if (val_[k] != 0) { ok = false; return changed; }
                            } else {
                                auto q = exact_div(val_[k], val_[a]);
                                if (!q) { ok = false; return changed; }
                                if (!put(b, *q, trail)) { ok = false; return changed; }
                                changed = true;
                            }
                        }
                    }
                }
                break;
            }
        }
        ok = true;
        return changed;
    }

    bool propagate(std::vector<std::size_t>& trail) {
        bool ok = true;
        while (force_pass(trail, ok) && ok) {}
        return ok;
    }

    bool consistent_so_far() const {
        for (const Equation& e : sys_.equations()) {
            const std::size_t i = e.i - 1;
            if (e.kind == EqKind::Unit) {
                if (set_[i] && val_[i] != 1) return false;
                continue;
            }
            const std::size_t j = e.j - 1, k = e.k - 1;
            if (!set_[i] || !set_[j] || !set_[k]) continue;
            if (e.kind == EqKind::Add) {
                if (val_[i] + val_[j] != val_[k]) return false;
            } else {
                if (val_[i] * val_[j] != val_[k]) return false;
            }
        }
        return true;
    }

    // A variable with a small complete candidate set, if any equation
    // offers one.
    std::optional<std::pair<std::size_t, std::vector<I>>> branch_candidates() const {
        for (const Equation& e : sys_.equations()) {
            if (e.kind != EqKind::Mul) continue;
            const std::size_t i = e.i - 1, j = e.j - 1, k = e.k - 1;
            if (i == j && j == k && !set_[i]) return std::pair{i, std::vector<I>{I(0), I(1)}};
            if (i == j && i != k && !set_[i] && set_[k]) {
                auto root = exact_sqrt(val_[k]);
                if (root && *root > 0) return std::pair{i, std::vector<I>{I(-*root), *root}};
            }
        }
        return std::nullopt;
    }

    template <class Emit>
    bool dfs(Emit&& emit) {
        std::vector<std::size_t> trail;
        if (!propagate(trail) || !consistent_so_far()) {
            undo(trail);
            return true;
        }
        if (assigned_ == val_.size()) {
            bool keep_going = true;
            if (is_solution(val_, sys_)) keep_going = emit(static_cast<const Tuple<I>&>(val_));
            undo(trail);
            return keep_going;
        }
        bool keep_going = true;
        if (auto br = branch_candidates()) {
            for (const I& cand : br->second) {
                tick();
                std::vector<std::size_t> sub;
                if (put(br->first, cand, sub)) {
                    keep_going = dfs(emit);
                }
                undo(sub);
                if (!keep_going) break;
            }
        } else {
            std::size_t var = 0;
            while (set_[var]) ++var;
            const I r = radii_[var];
            for (I cand = -r; cand <= r; cand += 1) {
                tick();
                std::vector<std::size_t> sub;
                if (put(var, cand, sub)) {
                    keep_going = dfs(emit);
                }
                undo(sub);
                if (!keep_going) break;
            }
        }
        undo(trail);
        return keep_going;
    }
};

} // namespace detail

// All solutions of s within the per-variable box |t_i| <= radii[i],
// in enumeration order.
template <IntegerLike I>
inline std::vector<Tuple<I>> solutions_in_box(const System& s, const std::vector<I>& radii,
                                              SolveLimits limits = {}) {
    detail::BoxSearch<I> search(s, radii, limits);
    std::vector<Tuple<I>> out;
    search.run([&](const Tuple<I>& t) {
        if (out.size() >= limits.max_results)
            throw budget_exceeded("solution set exceeds " + std::to_string(limits.max_results) +
                                  " tuples");
        out.push_back(t);
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const Tuple<I>& a, const Tuple<I>& b) { return order_cmp(a, b) < 0; });
    return out;
}

template <IntegerLike I>
inline std::vector<Tuple<I>> solutions_in_box(const System& s, const I& box_radius,
                                              SolveLimits limits = {}) {
    if (box_radius < 0) throw contract_violation("box radius must be non-negative");
    return solutions_in_box(s, std::vector<I>(s.n(), box_radius), limits);
}

// First solution found (search order) whose max-norm exceeds `bound`,
// within the box of the given radius.
template <IntegerLike I>
inline std::optional<Tuple<I>> find_solution_above(const System& s, const I& radius,
                                                   const I& bound, SolveLimits limits = {}) {
    detail::BoxSearch<I> search(s, std::vector<I>(s.n(), radius), limits);
    std::optional<Tuple<I>> hit;
    search.run([&](const Tuple<I>& t) {
        if (max_norm(t) > bound) {
            hit = t;
            return false;
        }
        return true;
    });
    return hit;
}

} // namespace diobound

#endif
