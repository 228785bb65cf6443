#pragma once

/**
 * @file rational.hpp
 * @brief Exact scalars: arbitrary-precision integers and fractions.
 *
 * Everything in binterp is computed over Rational. Values are always kept
 * in canonical form (gcd(num, den) = 1, den > 0, zero is 0/1), so equality
 * is structural and printing is deterministic.
 *
 * Powers follow the convention 0^0 = 1 everywhere. The operator code relies
 * on it to cover the degenerate cases h = 0 and y = 0 with one formula.
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "binterp/error.hpp"

namespace binterp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

/// num/den in canonical form; any sign on den is moved to num.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational{num, den};
}

/// n choose k; zero when k > n.
inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return Integer{0};
    if (k > n - k) k = n - k;
    Integer result{1};
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Row n of Pascal's triangle, binom(n, 0..n).
inline std::vector<Integer> binomial_row(std::size_t n) {
    std::vector<Integer> row(n + 1);
    row[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

/// x^e with 0^0 = 1.
inline Rational ipow(const Rational& x, std::size_t e) {
    Rational result{1};
    Rational base = x;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

/// x^0 .. x^n, again with 0^0 = 1.
inline std::vector<Rational> powers(const Rational& x, std::size_t n) {
    std::vector<Rational> out(n + 1);
    out[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) out[i] = out[i - 1] * x;
    return out;
}

inline Rational sign_power(std::size_t e) { return (e % 2 == 0) ? Rational{1} : Rational{-1}; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (!is_integer(x)) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw parse_error("malformed rational: '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("malformed rational: '" + std::string(whole) + "'");
    }
    Integer value{std::string(digits)};
    return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p", "p/q", "-p/q" (surrounding whitespace allowed). The result is canonical.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = detail::trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational{detail::parse_integer(s, text)};

    Integer num = detail::parse_integer(detail::trim(s.substr(0, slash)), text);
    std::string_view den_text = detail::trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-'))
        throw parse_error("malformed rational: '" + std::string(text) + "'");
    Integer den = detail::parse_integer(den_text, text);
    if (den == 0) throw parse_error("zero denominator: '" + std::string(text) + "'");
    return make_rational(std::move(num), std::move(den));
}

/// Comma-separated rationals, e.g. "1,1/2,-3".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string_view s = detail::trim(text);
    if (s.empty()) return out;
    while (true) {
        auto comma = s.find(',');
        out.push_back(parse_rational(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

template <class Range>
std::string join(const Range& values, std::string_view sep = ",") {
    std::string out;
    bool first = true;
    for (const Rational& v : values) {
        if (!first) out += sep;
        out += to_string(v);
        first = false;
    }
    return out;
}

}  // namespace binterp
