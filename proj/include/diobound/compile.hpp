#ifndef DIOBOUND_COMPILE_HPP
#define DIOBOUND_COMPILE_HPP

// Compilation of a polynomial equation into a relation system with the
// same integer solutions. Terms with negative coefficients move across
// the equality so both sides are non-negative combinations; constants
// are built from the unit variable by doubling and add-one chains with
// value sharing; monomials by left-to-right product chains; each side is
// folded by an addition chain; and u = v is expressed through a zero
// variable as u + z = v with z + z = z. Every auxiliary value is forced,
// so assignments of the original variables extend uniquely.

#include <map>
#include <string>
#include <vector>

#include "diobound/equation.hpp"
#include "diobound/parse.hpp"
#include "diobound/solve.hpp"

namespace diobound {

enum class AuxKind { original, one, zero, constant, monomial, term, partial_sum };

struct AuxDef {
    AuxKind kind = AuxKind::original;
    BigInt constant;        // constant: its value
    Monomial monomial;      // monomial / term: exponents over the original variables
    BigInt coeff;           // term: positive coefficient
    unsigned add_a = 0;     // partial_sum: operands of Add(a, b, self), 1-based
    unsigned add_b = 0;
};

struct CompilationResult {
    System system;
    std::map<std::string, unsigned> var_map;   // original name -> 1-based index
    std::map<unsigned, std::string> aux_roles; // auxiliary index -> role
    std::vector<AuxDef> defs;                  // definitions for variables 1..m
    PolyEquation equation;

    unsigned m() const { return system.n(); }
};

namespace detail {

class Compiler {
public:
    explicit Compiler(const PolyEquation& eq) : eq_(eq) {}

    CompilationResult run() {
        const std::size_t k = eq_.var_count();
        for (std::size_t v = 0; v < k; ++v) {
            result_.var_map[eq_.variables[v]] = static_cast<unsigned>(v + 1);
            result_.defs.push_back(AuxDef{AuxKind::original, 0, {}, 0, 0, 0});
        }

        // split lhs - rhs into two positive-coefficient term lists
        Polynomial combined = eq_.lhs;
        for (const auto& [m, c] : eq_.rhs) poly_add_term(combined, m, BigInt(-c));
        std::vector<std::pair<BigInt, Monomial>> left, right;
        for (const auto& [m, c] : combined) {
            if (c > 0)
                left.emplace_back(c, m);
            else
                right.emplace_back(BigInt(-c), m);
        }

        if (auto direct = try_unit_form(left, right)) return std::move(*direct);

        const unsigned u = side_var(left);
        const unsigned v = side_var(right);
        const unsigned z = zero_var();
        eqs_.push_back(add(u, z, v));

        finish();
        check_size_bound(left, right);
        return std::move(result_);
    }

private:
    const PolyEquation& eq_;
    CompilationResult result_;
    std::vector<Equation> eqs_;
    std::map<BigInt, unsigned> const_vars_;
    std::map<Monomial, unsigned> mono_vars_;
    unsigned one_ = 0, zero_ = 0;

    unsigned fresh(AuxKind kind, const std::string& role, AuxDef def) {
        def.kind = kind;
        result_.defs.push_back(std::move(def));
        const unsigned idx = static_cast<unsigned>(result_.defs.size());
        if (idx > 0xffff) throw budget_exceeded("compiled system exceeds 65535 variables");
        result_.aux_roles[idx] = role;
        return idx;
    }

    // x_v = 1 with nothing else: emit the unit equation directly.
    std::optional<CompilationResult> try_unit_form(
        const std::vector<std::pair<BigInt, Monomial>>& left,
        const std::vector<std::pair<BigInt, Monomial>>& right) {
        auto classify = [](const std::vector<std::pair<BigInt, Monomial>>& side)
            -> std::optional<unsigned> {
            if (side.size() != 1 || side.front().first != 1) return std::nullopt;
            const Monomial& m = side.front().second;
            if (total_degree(m) != 1) return std::nullopt;
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v] == 1) return static_cast<unsigned>(v + 1);
            return std::nullopt;
        };
        auto constant_one = [](const std::vector<std::pair<BigInt, Monomial>>& side) {
            return side.size() == 1 && side.front().first == 1 &&
                   total_degree(side.front().second) == 0;
        };
        std::optional<unsigned> var;
        if (constant_one(right))
            var = classify(left);
        else if (constant_one(left))
            var = classify(right);
        if (!var) return std::nullopt;
        eqs_.push_back(unit(*var));
        finish();
        return std::move(result_);
    }

    void finish() {
        result_.system = System(static_cast<unsigned>(result_.defs.size()), eqs_);
        result_.equation = eq_;
    }

    unsigned one_var() {
        if (!one_) {
            one_ = fresh(AuxKind::one, "one", AuxDef{});
            eqs_.push_back(unit(one_));
            const_vars_[1] = one_;
        }
        return one_;
    }

    unsigned zero_var() {
        if (!zero_) {
            zero_ = fresh(AuxKind::zero, "zero", AuxDef{});
            eqs_.push_back(add(zero_, zero_, zero_));
        }
        return zero_;
    }

    // doubling / add-one chain, sharing every intermediate value
    unsigned const_var(const BigInt& c) {
        if (c == 1) return one_var();
        auto hit = const_vars_.find(c);
        if (hit != const_vars_.end()) return hit->second;
        unsigned v;
        AuxDef def;
        def.constant = c;
        if (c % 2 == 0) {
            const unsigned half = const_var(c / 2);
            v = fresh(AuxKind::constant, "constant " + c.get_str(), def);
            eqs_.push_back(add(half, half, v));
        } else {
            const unsigned pred = const_var(c - 1);
            const unsigned one = one_var();
            v = fresh(AuxKind::constant, "constant " + c.get_str(), def);
            eqs_.push_back(add(pred, one, v));
        }
        const_vars_[c] = v;
        return v;
    }

    // left-to-right product chain over the variables, sharing prefixes
    unsigned mono_var(const Monomial& m) {
        auto hit = mono_vars_.find(m);
        if (hit != mono_vars_.end()) return hit->second;
        // peel one factor: highest-index variable with positive exponent
        std::size_t last = m.size();
        for (std::size_t v = m.size(); v-- > 0;) {
            if (m[v] > 0) {
                last = v;
                break;
            }
        }
        const unsigned factor = static_cast<unsigned>(last + 1); // original variable
        if (total_degree(m) == 1) {
            mono_vars_[m] = factor;
            return factor;
        }
        Monomial prefix = m;
        prefix[last] -= 1;
        const unsigned head = mono_var(prefix);
        AuxDef def;
        def.monomial = m;
        const unsigned v =
            fresh(AuxKind::monomial, "monomial " + mono_text(m), def);
        eqs_.push_back(mul(head, factor, v));
        mono_vars_[m] = v;
        return v;
    }

    unsigned term_var(const BigInt& coeff, const Monomial& m) {
        if (total_degree(m) == 0) return const_var(coeff);
        const unsigned mono = mono_var(m);
        if (coeff == 1) return mono;
        const unsigned c = const_var(coeff);
        AuxDef def;
        def.coeff = coeff;
        def.monomial = m;
        const unsigned v = fresh(
            AuxKind::term, "term " + coeff.get_str() + "*" + mono_text(m), def);
        eqs_.push_back(mul(c, mono, v));
        return v;
    }

    unsigned side_var(const std::vector<std::pair<BigInt, Monomial>>& side) {
        if (side.empty()) return zero_var();
        std::vector<unsigned> terms;
        terms.reserve(side.size());
        for (const auto& [c, m] : side) terms.push_back(term_var(c, m));
        unsigned acc = terms.front();
        for (std::size_t t = 1; t < terms.size(); ++t) {
            AuxDef def;
            def.add_a = acc;
            def.add_b = terms[t];
            const unsigned v = fresh(AuxKind::partial_sum, "partial sum", def);
            eqs_.push_back(add(acc, terms[t], v));
            acc = v;
        }
        return acc;
    }

    std::string mono_text(const Monomial& m) const {
        std::string out;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!out.empty()) out += "*";
            out += eq_.variables[v];
            if (m[v] > 1) out += "^" + std::to_string(m[v]);
        }
        return out;
    }

    // m <= originals + per-term chain vars + per-side fold vars
    //   + 2 * sum of constant bit lengths + 2 (unit and zero)
    void check_size_bound(const std::vector<std::pair<BigInt, Monomial>>& left,
                          const std::vector<std::pair<BigInt, Monomial>>& right) {
        std::size_t budget = eq_.var_count() + 2;
        std::map<BigInt, bool> consts;
        for (const auto* side : {&left, &right}) {
            if (!side->empty()) budget += side->size() - 1;
            for (const auto& [c, m] : *side) {
                budget += std::max<std::size_t>(total_degree(m), 1);
                consts[c] = true;
            }
        }
        for (const auto& [c, used] : consts)
            budget += 2 * mpz_sizeinbase(c.get_mpz_t(), 2);
        if (result_.defs.size() > budget)
            throw std::logic_error("compiled variable count " +
                                   std::to_string(result_.defs.size()) +
                                   " exceeds its structural bound " + std::to_string(budget));
    }
};

} // namespace detail

inline CompilationResult compile(const PolyEquation& eq) { return detail::Compiler(eq).run(); }

// Value of every variable forced by an assignment of the originals.
inline Tuple<BigInt> forced_extension(const CompilationResult& r, const Tuple<BigInt>& originals) {
    if (originals.size() != r.equation.var_count())
        throw contract_violation("assignment length does not match the equation");
    Tuple<BigInt> full(r.defs.size(), 0);
    for (std::size_t v = 0; v < r.defs.size(); ++v) {
        const AuxDef& d = r.defs[v];
        switch (d.kind) {
        case AuxKind::original: full[v] = originals[v]; break;
        case AuxKind::one: full[v] = 1; break;
        case AuxKind::zero: full[v] = 0; break;
        case AuxKind::constant: full[v] = d.constant; break;
        case AuxKind::monomial:
        case AuxKind::term: {
            BigInt acc = d.kind == AuxKind::term ? d.coeff : BigInt(1);
            for (std::size_t q = 0; q < d.monomial.size(); ++q)
                for (unsigned e = 0; e < d.monomial[q]; ++e) acc *= originals[q];
            full[v] = acc;
            break;
        }
        case AuxKind::partial_sum:
            full[v] = full[d.add_a - 1] + full[d.add_b - 1];
            break;
        }
    }
    return full;
}

// Largest absolute value each variable can take when the originals stay
// within the box.
inline std::vector<BigInt> derived_radii(const CompilationResult& r, const BigInt& box_radius) {
    std::vector<BigInt> radii(r.defs.size(), 0);
    for (std::size_t v = 0; v < r.defs.size(); ++v) {
        const AuxDef& d = r.defs[v];
        switch (d.kind) {
        case AuxKind::original: radii[v] = box_radius; break;
        case AuxKind::one: radii[v] = 1; break;
        case AuxKind::zero: radii[v] = 0; break;
        case AuxKind::constant: radii[v] = abs_of(d.constant); break;
        case AuxKind::monomial:
        case AuxKind::term: {
            BigInt acc = d.kind == AuxKind::term ? abs_of(d.coeff) : BigInt(1);
            for (std::size_t q = 0; q < d.monomial.size(); ++q)
                for (unsigned e = 0; e < d.monomial[q]; ++e) acc *= box_radius;
            radii[v] = acc;
            break;
        }
        case AuxKind::partial_sum:
            radii[v] = radii[d.add_a - 1] + radii[d.add_b - 1];
            break;
        }
    }
    return radii;
}

struct EquivalenceReport {
    std::uint64_t assignments_checked = 0;
    std::uint64_t eq_solutions = 0;
    std::uint64_t system_solutions = 0;
    bool forward_ok = true;  // satisfying assignments extend to system solutions
    bool backward_ok = true; // system solutions restrict to satisfying assignments

    bool ok() const {
        return forward_ok && backward_ok && eq_solutions == system_solutions;
    }
};

// Brute-force cross-check of the compilation over a box: forward, every
// assignment of original variables behaves as the equation dictates
// (its forced extension solves the system exactly when the equation
// holds); backward, every system solution inside the derived box
// restricts to a satisfying assignment and equals its forced extension.
inline EquivalenceReport check_equivalence(const CompilationResult& r, const BigInt& box_radius,
                                           SolveLimits limits = {}) {
    if (box_radius < 0) throw contract_violation("box radius must be non-negative");
    const std::size_t k = r.equation.var_count();

    BigInt volume = 1;
    for (std::size_t v = 0; v < k; ++v) volume *= 2 * box_radius + 1;
    if (volume > BigInt(static_cast<unsigned long>(limits.max_nodes)))
        throw budget_exceeded("assignment box exceeds the node budget");

    EquivalenceReport rep;
    Tuple<BigInt> assign(k, -box_radius);
    while (true) {
        ++rep.assignments_checked;
        const bool holds = poly_eval(r.equation.lhs, assign) == poly_eval(r.equation.rhs, assign);
        const Tuple<BigInt> ext = forced_extension(r, assign);
        const bool solves = is_solution(ext, r.system);
        if (holds) {
            ++rep.eq_solutions;
            if (!solves) rep.forward_ok = false;
        } else if (solves) {
            rep.forward_ok = false; // extension must fail exactly when the equation does
        }
        std::size_t idx = 0;
        while (idx < k) {
            if (assign[idx] < box_radius) {
                assign[idx] += 1;
                break;
            }
            assign[idx] = -box_radius;
            ++idx;
        }
        if (idx == k) break;
    }

    const std::vector<BigInt> radii = derived_radii(r, box_radius);
    for (const Tuple<BigInt>& sol : solutions_in_box(r.system, radii, limits)) {
        ++rep.system_solutions;
        Tuple<BigInt> originals(sol.begin(), sol.begin() + k);
        if (poly_eval(r.equation.lhs, originals) != poly_eval(r.equation.rhs, originals)) {
            rep.backward_ok = false;
            continue;
        }
        if (forced_extension(r, originals) != sol) rep.backward_ok = false;
    }
    return rep;
}

} // namespace diobound

#endif
