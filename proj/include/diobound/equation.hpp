#ifndef DIOBOUND_EQUATION_HPP
#define DIOBOUND_EQUATION_HPP

// The atomic relations x_i = 1, x_i + x_j = x_k, x_i * x_j = x_k over
// 1-based variable indices, and finite duplicate-free sets of them.
// Add/Mul operands are stored with i <= j so that textually different
// spellings of the same symmetric constraint collapse to one value; a
// sorted, deduplicated equation vector is the canonical set form and
// doubles as a memoization key.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "diobound/errors.hpp"
#include "diobound/tuples.hpp"

namespace diobound {

enum class EqKind : std::uint16_t { Unit = 0, Add = 1, Mul = 2 };

struct Equation {
    EqKind kind;
    std::uint16_t i = 0, j = 0, k = 0; // Unit uses i only

    friend auto operator<=>(const Equation&, const Equation&) = default;
};

inline Equation unit(unsigned i) {
    return Equation{EqKind::Unit, static_cast<std::uint16_t>(i), 0, 0};
}

inline Equation add(unsigned i, unsigned j, unsigned k) {
    if (i > j) std::swap(i, j);
    return Equation{EqKind::Add, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                    static_cast<std::uint16_t>(k)};
}

inline Equation mul(unsigned i, unsigned j, unsigned k) {
    if (i > j) std::swap(i, j);
    return Equation{EqKind::Mul, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                    static_cast<std::uint16_t>(k)};
}

inline std::string format_equation(const Equation& e) {
    switch (e.kind) {
    case EqKind::Unit:
        return "x" + std::to_string(e.i) + " = 1";
    case EqKind::Add:
        return "x" + std::to_string(e.i) + " + x" + std::to_string(e.j) + " = x" +
               std::to_string(e.k);
    default:
        return "x" + std::to_string(e.i) + " * x" + std::to_string(e.j) + " = x" +
               std::to_string(e.k);
    }
}

// A duplicate-free subset of the dimension-n relation universe,
// interpreted conjunctively over Z^n.
class System {
public:
    System() = default;

    System(unsigned n, std::vector<Equation> equations) : n_(n), eqs_(std::move(equations)) {
        if (n_ == 0) throw contract_violation("system dimension must be positive");
        for (Equation& e : eqs_) {
            if (e.kind != EqKind::Unit && e.i > e.j) std::swap(e.i, e.j);
            bool ok = e.kind == EqKind::Unit
                          ? (e.i >= 1 && e.i <= n_ && e.j == 0 && e.k == 0)
                          : (e.i >= 1 && e.j >= 1 && e.k >= 1 && e.i <= n_ && e.j <= n_ && e.k <= n_);
            if (!ok)
                throw contract_violation("equation index out of range for dimension " +
                                         std::to_string(n_) + ": " + format_equation(e));
        }
        std::sort(eqs_.begin(), eqs_.end());
        eqs_.erase(std::unique(eqs_.begin(), eqs_.end()), eqs_.end());
    }

    unsigned n() const { return n_; }
    const std::vector<Equation>& equations() const { return eqs_; }
    bool empty() const { return eqs_.empty(); }
    std::size_t size() const { return eqs_.size(); }

    bool contains(const Equation& e) const {
        return std::binary_search(eqs_.begin(), eqs_.end(), e);
    }

    // Subset test: every equation of this system appears in `other`.
    bool subset_of(const System& other) const {
        return std::includes(other.eqs_.begin(), other.eqs_.end(), eqs_.begin(), eqs_.end());
    }

    bool has_units() const {
        for (const Equation& e : eqs_)
            if (e.kind == EqKind::Unit) return true;
        return false;
    }

    friend bool operator==(const System&, const System&) = default;

private:
    unsigned n_ = 1;
    std::vector<Equation> eqs_;
};

// Canonical textual form: a header line "n = <int>" followed by one
// equation per line.
inline std::string format_system(const System& s) {
    std::string out = "n = " + std::to_string(s.n()) + "\n";
    for (const Equation& e : s.equations()) out += format_equation(e) + "\n";
    return out;
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}

inline unsigned parse_var_index(const std::string& s, std::size_t& p) {
    if (p >= s.size() || s[p] != 'x') throw parse_error("expected variable 'x<i>'", p);
    ++p;
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw parse_error("expected variable index", p);
    unsigned long v = std::stoul(s.substr(start, p - start));
    if (v == 0 || v > 0xffff) throw parse_error("variable index out of range", start);
    return static_cast<unsigned>(v);
}

inline Equation parse_equation_line(const std::string& line) {
    std::size_t p = 0;
    skip_ws(line, p);
    unsigned i = parse_var_index(line, p);
    skip_ws(line, p);
    if (p < line.size() && line[p] == '=') {
        ++p;
        skip_ws(line, p);
        if (p >= line.size() || line[p] != '1') throw parse_error("unit equation must read 'x<i> = 1'", p);
        ++p;
        skip_ws(line, p);
        if (p != line.size()) throw parse_error("trailing characters after equation", p);
        return unit(i);
    }
    if (p >= line.size() || (line[p] != '+' && line[p] != '*'))
        throw parse_error("expected '+', '*' or '= 1'", p);
    char op = line[p++];
    skip_ws(line, p);
    unsigned j = parse_var_index(line, p);
    skip_ws(line, p);
    if (p >= line.size() || line[p] != '=') throw parse_error("expected '='", p);
    ++p;
    skip_ws(line, p);
    unsigned k = parse_var_index(line, p);
    skip_ws(line, p);
    if (p != line.size()) throw parse_error("trailing characters after equation", p);
    return op == '+' ? add(i, j, k) : mul(i, j, k);
}

} // namespace detail

// Compact one-line encoding of an Add/Mul relation list, e.g.
// "A1,2,3;M1,1,2". Used as a memo key and in checkpoints.
inline std::string encode_signature(const std::vector<Equation>& sig) {
    std::string out;
    for (const Equation& e : sig) {
        if (!out.empty()) out += ';';
        out += e.kind == EqKind::Add ? 'A' : 'M';
        out += std::to_string(e.i) + ',' + std::to_string(e.j) + ',' + std::to_string(e.k);
    }
    return out;
}

inline std::vector<Equation> decode_signature(const std::string& text) {
    std::vector<Equation> sig;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        const std::string part = text.substr(pos, end - pos);
        if (part.size() < 6 || (part[0] != 'A' && part[0] != 'M'))
            throw parse_error("bad signature entry: '" + part + "'", pos);
        unsigned i = 0, j = 0, k = 0;
        if (std::sscanf(part.c_str() + 1, "%u,%u,%u", &i, &j, &k) != 3)
            throw parse_error("bad signature indices: '" + part + "'", pos);
        sig.push_back(part[0] == 'A' ? add(i, j, k) : mul(i, j, k));
        pos = end + 1;
    }
    return sig;
}

inline System parse_system(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::size_t end = nl == std::string::npos ? text.size() : nl;
        std::string line = text.substr(pos, end - pos);
        std::size_t a = 0, b = line.size();
        while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
        line = line.substr(a, b - a);
        if (!line.empty()) lines.push_back(line);
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    if (lines.empty()) throw parse_error("empty system text", 0);
    const std::string& head = lines.front();
    if (head.compare(0, 1, "n") != 0) throw parse_error("missing 'n = <int>' header", 0);
    std::size_t eq = head.find('=');
    if (eq == std::string::npos) throw parse_error("missing '=' in header", 0);
    unsigned long n = 0;
    try {
        n = std::stoul(head.substr(eq + 1));
    } catch (const std::exception&) {
        throw parse_error("bad dimension in header", eq + 1);
    }
    std::vector<Equation> eqs;
    for (std::size_t li = 1; li < lines.size(); ++li) eqs.push_back(detail::parse_equation_line(lines[li]));
    return System(static_cast<unsigned>(n), std::move(eqs));
}

} // namespace diobound

#endif
