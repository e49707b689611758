#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hindlab {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational; always in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline BigInt numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }

inline Rat abs(const Rat& r) { return r.sign() < 0 ? Rat(-r) : r; }

/// 2^k as an exact rational, for either sign of k.
inline Rat pow2(long k) {
    BigInt one = 1;
    if (k >= 0) return Rat(one << static_cast<unsigned>(k));
    return Rat(BigInt(1), one << static_cast<unsigned>(-k));
}

/// The unique k with 2^k <= r < 2^(k+1).
inline long dyadic_exponent(const Rat& r) {
    if (r.sign() <= 0) throw DomainError("dyadic_exponent: argument must be positive");
    const BigInt num = numerator_of(r);
    const BigInt den = denominator_of(r);
    long k = static_cast<long>(boost::multiprecision::msb(num)) -
             static_cast<long>(boost::multiprecision::msb(den));
    // The bit-length estimate is off by at most one in either direction.
    while (r < pow2(k)) --k;
    while (r >= pow2(k + 1)) ++k;
    return k;
}

/// floor(log2 n) for a positive machine integer.
inline int floor_log2(std::uint64_t n) {
    if (n == 0) throw DomainError("floor_log2: argument must be positive");
    return 63 - __builtin_clzll(n);
}

/// `num/den`, denominator omitted when it is 1.
inline std::string to_string(const Rat& r) {
    const BigInt den = denominator_of(r);
    if (den == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + den.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline BigInt parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("malformed rational '" + std::string(whole) + "'");
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace detail

/// Parses `num`, `num/den` (either sign on the numerator). Reduces to lowest terms.
inline Rat parse_rat(std::string_view text) {
    const auto s = detail::trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(detail::parse_int(s, text));
    const BigInt num = detail::parse_int(s.substr(0, slash), text);
    const BigInt den = detail::parse_int(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return den < 0 ? Rat(-num, -den) : Rat(num, den);
}

}  // namespace hindlab
