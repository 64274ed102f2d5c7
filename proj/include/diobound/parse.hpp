#ifndef DIOBOUND_PARSE_HPP
#define DIOBOUND_PARSE_HPP

// Recursive-descent parser for polynomial equations. Grammar:
//
//   equation := expr '=' expr
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' nat]
//   base     := nat | ident | '(' expr ')'
//
// Multiplication is always explicit, exponents are non-negative integer
// literals, and errors carry the offending position.

#include <cctype>
#include <string>

#include "diobound/poly.hpp"

namespace diobound {

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    PolyEquation parse() {
        Polynomial lhs = expr();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '=')
            throw parse_error("expected '='", pos_);
        ++pos_;
        Polynomial rhs = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("trailing input after equation", pos_);
        eq_.lhs = widen(std::move(lhs));
        eq_.rhs = widen(std::move(rhs));
        return std::move(eq_);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    PolyEquation eq_;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    // Sub-expressions are built before all variables are known, so every
    // monomial is padded to the final variable count at the end.
    Polynomial widen(Polynomial&& p) {
        Polynomial out;
        for (auto& [m, c] : p) {
            Monomial full = m;
            full.resize(eq_.variables.size(), 0);
            out.emplace(std::move(full), c);
        }
        return out;
    }

    std::size_t var_index(const std::string& name) {
        for (std::size_t v = 0; v < eq_.variables.size(); ++v)
            if (eq_.variables[v] == name) return v;
        eq_.variables.push_back(name);
        return eq_.variables.size() - 1;
    }

    BigInt nat_literal() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected integer literal", start);
        return parse_bigint(text_.substr(start, pos_ - start));
    }

    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek('-')) {
            ++pos_;
            negate = true;
        } else if (peek('+')) {
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) {
            Polynomial flipped;
            for (auto& [m, c] : acc) flipped.emplace(m, BigInt(-c));
            acc = std::move(flipped);
        }
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
            const bool minus = text_[pos_] == '-';
            ++pos_;
            Polynomial t = term();
            for (auto& [m, c] : t) poly_add_term(acc, widen_one(m), minus ? BigInt(-c) : c);
        }
        return normalize(std::move(acc));
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek('*')) {
            ++pos_;
            Polynomial f = factor();
            acc = mul_padded(acc, f);
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("exponent must be a non-negative integer literal", pos_);
            const BigInt e = nat_literal();
            if (e > 64) throw parse_error("exponent too large", pos_);
            Polynomial acc;
            poly_add_term(acc, Monomial(widest(), 0), BigInt(1));
            for (BigInt c = 0; c < e; c += 1) acc = mul_padded(acc, b);
            return acc;
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Polynomial p;
            poly_add_term(p, Monomial(widest(), 0), nat_literal());
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::size_t v = var_index(text_.substr(start, pos_ - start));
            Polynomial p;
            Monomial m(widest(), 0);
            m[v] = 1;
            poly_add_term(p, std::move(m), BigInt(1));
            return p;
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!peek(')')) throw parse_error("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    std::size_t widest() const { return eq_.variables.size(); }

    Monomial widen_one(const Monomial& m) const {
        Monomial out = m;
        out.resize(widest(), 0);
        return out;
    }

    Polynomial normalize(Polynomial&& p) {
        Polynomial out;
        for (auto& [m, c] : p) poly_add_term(out, widen_one(m), c);
        return out;
    }

    Polynomial mul_padded(const Polynomial& a, const Polynomial& b) {
        Polynomial pa = pad(a), pb = pad(b);
        return poly_mul(pa, pb, widest());
    }

    Polynomial pad(const Polynomial& p) {
        Polynomial out;
        for (const auto& [m, c] : p) out.emplace(widen_one(m), c);
        return out;
    }
};

} // namespace detail

inline PolyEquation parse_equation(const std::string& text) {
    return detail::PolyParser(text).parse();
}

} // namespace diobound

#endif
