#ifndef DIOBOUND_INTS_HPP
#define DIOBOUND_INTS_HPP

// Integer kinds used throughout: exact arbitrary precision (GMP) as the
// general representation, with int64 / int128 instantiations for search
// kernels whose value ranges are provably small. All arithmetic is exact;
// no floating point anywhere.

#include <cstdint>
#include <concepts>
#include <limits>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "diobound/errors.hpp"

namespace diobound {

using BigInt = mpz_class;
using Int128 = __int128;

template <typename T>
concept IntegerLike = std::same_as<T, std::int64_t> || std::same_as<T, Int128> ||
                      std::same_as<T, BigInt>;

template <IntegerLike I>
inline I abs_of(const I& v) {
    if constexpr (std::same_as<I, BigInt>) {
        BigInt r;
        mpz_abs(r.get_mpz_t(), v.get_mpz_t());
        return r;
    } else {
        return v < 0 ? I(-v) : v;
    }
}

inline std::string to_decimal(std::int64_t v) { return std::to_string(v); }

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline std::string to_decimal(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

inline BigInt to_bigint(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt to_bigint(const BigInt& v) { return v; }
inline BigInt to_bigint(Int128 v) {
    BigInt hi(static_cast<long>(v >> 64));
    BigInt r = hi << 64;
    r += static_cast<unsigned long>(static_cast<unsigned __int128>(v) & 0xffffffffffffffffULL);
    return r;
}

template <IntegerLike I>
inline bool fits(const BigInt& v) {
    if constexpr (std::same_as<I, BigInt>) {
        return true;
    } else if constexpr (std::same_as<I, std::int64_t>) {
        return v >= BigInt(std::numeric_limits<long>::min()) &&
               v <= BigInt(std::numeric_limits<long>::max());
    } else {
        static const BigInt hi = (BigInt(1) << 127) - 1;
        return v >= -hi && v <= hi;
    }
}

template <IntegerLike I>
inline I from_bigint(const BigInt& v) {
    if constexpr (std::same_as<I, BigInt>) {
        return v;
    } else {
        if (!fits<I>(v))
            throw contract_violation("integer does not fit the selected kernel type: " + v.get_str());
        if constexpr (std::same_as<I, std::int64_t>) {
            return static_cast<std::int64_t>(v.get_si());
        } else {
            bool neg = v < 0;
            BigInt a = neg ? BigInt(-v) : v;
            unsigned __int128 u =
                (static_cast<unsigned __int128>(mpz_class(a >> 64).get_ui()) << 64) |
                static_cast<unsigned __int128>(mpz_class(a & BigInt(0xffffffffffffffffUL)).get_ui());
            Int128 r = static_cast<Int128>(u);
            return neg ? -r : r;
        }
    }
}

inline BigInt parse_bigint(const std::string& text) {
    BigInt v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw parse_error("not a decimal integer: '" + text + "'", 0);
    return v;
}

// 2^k, with a representability guard for the fixed-width kernels.
template <IntegerLike I>
inline I pow2(unsigned k) {
    if constexpr (std::same_as<I, BigInt>) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
        return r;
    } else if constexpr (std::same_as<I, std::int64_t>) {
        if (k > 62) throw contract_violation("2^" + std::to_string(k) + " overflows int64");
        return std::int64_t(1) << k;
    } else {
        if (k > 126) throw contract_violation("2^" + std::to_string(k) + " overflows int128");
        return Int128(1) << k;
    }
}

// The window the bounded statements quantify over at dimension n:
// lower = 2^(2^(n-1)), upper = 2^(2^n), so lower^2 = upper.
struct ShellBounds {
    unsigned n;
    BigInt lower;
    BigInt upper;
};

inline BigInt shell_lower(unsigned n) {
    if (n < 1 || n > 24) throw contract_violation("shell bounds need 1 <= n <= 24");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, 1u << (n - 1));
    return r;
}

inline BigInt shell_upper(unsigned n) {
    if (n < 1 || n > 24) throw contract_violation("shell bounds need 1 <= n <= 24");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, 1u << n);
    return r;
}

inline ShellBounds shell_bounds(unsigned n) { return ShellBounds{n, shell_lower(n), shell_upper(n)}; }

} // namespace diobound

#endif
