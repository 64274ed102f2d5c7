#ifndef DIOBOUND_POLY_HPP
#define DIOBOUND_POLY_HPP

// Multivariate polynomials with exact integer coefficients, in canonical
// form: named variables in first-appearance order, monomials as exponent
// vectors, like terms merged, zero coefficients dropped, terms ordered by
// total degree then exponents.

#include <map>
#include <string>
#include <vector>

#include "diobound/ints.hpp"
#include "diobound/tuples.hpp"

namespace diobound {

// exponent per variable, indexed like the owning equation's variable list
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// sum of coeff * monomial
using Polynomial = std::map<Monomial, BigInt, MonomialOrder>;

inline void poly_add_term(Polynomial& p, Monomial m, const BigInt& coeff) {
    auto [it, fresh] = p.emplace(std::move(m), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) p.erase(it);
    } else if (it->second == 0) {
        p.erase(it);
    }
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b, std::size_t var_count) {
    Polynomial out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m(var_count, 0);
            for (std::size_t v = 0; v < var_count; ++v) m[v] = ma[v] + mb[v];
            poly_add_term(out, std::move(m), BigInt(ca * cb));
        }
    }
    return out;
}

inline unsigned poly_degree(const Polynomial& p) {
    unsigned d = 0;
    for (const auto& [m, c] : p) d = std::max(d, total_degree(m));
    return d;
}

template <IntegerLike I>
inline I poly_eval(const Polynomial& p, const std::vector<I>& values) {
    I acc = 0;
    for (const auto& [m, c] : p) {
        I term = from_bigint<I>(c);
        for (std::size_t v = 0; v < m.size(); ++v)
            for (unsigned e = 0; e < m[v]; ++e) term = I(term * values[v]);
        acc = I(acc + term);
    }
    return acc;
}

// One polynomial equation lhs = rhs over named variables.
struct PolyEquation {
    std::vector<std::string> variables; // first-appearance order
    Polynomial lhs, rhs;

    unsigned degree() const { return std::max(poly_degree(lhs), poly_degree(rhs)); }
    std::size_t var_count() const { return variables.size(); }
};

inline std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& vars) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    // highest degree first reads naturally
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        const bool constant = total_degree(m) == 0;
        std::string factors;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars[v];
            if (m[v] > 1) factors += "^" + std::to_string(m[v]);
        }
        if (a != 1 || constant) {
            out += a.get_str();
            if (!factors.empty()) out += "*";
        }
        out += factors;
    }
    return out;
}

inline std::string format_poly_equation(const PolyEquation& eq) {
    return format_polynomial(eq.lhs, eq.variables) + " = " + format_polynomial(eq.rhs, eq.variables);
}

} // namespace diobound

#endif
