#ifndef DIOBOUND_TUPLES_HPP
#define DIOBOUND_TUPLES_HPP

#include <cctype>
#include <string>
#include <vector>

#include "diobound/ints.hpp"

namespace diobound {

// An ordered n-tuple of exact integers. Candidate solutions, witnesses and
// catalog members are all plain value vectors of the active integer kind.
template <IntegerLike I>
using Tuple = std::vector<I>;

template <IntegerLike I>
inline I max_norm(const Tuple<I>& t) {
    I m = 0;
    for (const I& v : t) {
        I a = abs_of(v);
        if (a > m) m = a;
    }
    return m;
}

template <IntegerLike I>
inline bool pairwise_distinct(const Tuple<I>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j]) return false;
    return true;
}

template <IntegerLike I>
inline bool descending_abs(const Tuple<I>& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (abs_of(t[i]) < abs_of(t[i + 1])) return false;
    return true;
}

template <IntegerLike I>
inline std::string format_tuple(const Tuple<I>& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += to_decimal(t[i]);
    }
    return out;
}

// Comma-separated decimal integers, e.g. "2,4,16". Whitespace around
// entries is tolerated.
template <IntegerLike I>
inline Tuple<I> parse_tuple(const std::string& text) {
    Tuple<I> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        std::size_t a = pos, b = end;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        if (a == b) throw parse_error("empty tuple entry", a);
        out.push_back(from_bigint<I>(parse_bigint(text.substr(a, b - a))));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw parse_error("empty tuple", 0);
    return out;
}

template <IntegerLike To, IntegerLike From>
inline Tuple<To> convert_tuple(const Tuple<From>& t) {
    Tuple<To> out;
    out.reserve(t.size());
    for (const From& v : t) out.push_back(from_bigint<To>(to_bigint(v)));
    return out;
}

} // namespace diobound

#endif
