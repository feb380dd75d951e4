#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "depthzero/errors.hpp"

namespace depthzero {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer ipow(const Integer& base, std::uint64_t exp) {
    Integer result = 1;
    Integer b = base;
    while (exp != 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp != 0) b *= b;
    }
    return result;
}

// base^exp for a signed exponent; base must be nonzero when exp < 0.
inline Rational rpow(const Integer& base, std::int64_t exp) {
    if (exp >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(exp)));
    require_param(base != 0, "zero raised to a negative power");
    return Rational(Integer(1), ipow(base, static_cast<std::uint64_t>(-exp)));
}

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integral(const Rational& x) { return denominator_of(x) == 1; }

// Canonical "num/den" form; integers print as "k/1".
inline std::string to_fraction_string(const Rational& x) {
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace detail {

inline Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    require_param(!digits.empty(), "malformed rational '" + std::string(whole) + "'");
    Integer value = 0;
    for (char c : digits) {
        require_param(c >= '0' && c <= '9', "malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace detail

// Accepts "a/b", "k" and plain decimals such as "0.05"; decimals are read
// digit by digit, so no binary floating point is involved.
inline Rational parse_rational(std::string_view text) {
    require_param(!text.empty(), "empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(text.substr(0, slash), text);
        Integer den = detail::parse_integer(text.substr(slash + 1), text);
        require_param(den != 0, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        Integer int_part = whole.empty() || whole == "-" || whole == "+"
                               ? Integer(0)
                               : detail::parse_integer(whole, text);
        Integer frac_part = frac.empty() ? Integer(0) : detail::parse_integer(frac, text);
        require_param(frac.empty() || (frac.front() != '-' && frac.front() != '+'),
                      "malformed rational '" + std::string(text) + "'");
        Integer scale = ipow(10, frac.size());
        Integer magnitude = (int_part < 0 ? Integer(-int_part) : int_part) * scale + frac_part;
        return Rational(negative ? Integer(-magnitude) : magnitude, scale);
    }
    return Rational(detail::parse_integer(text, text));
}

}  // namespace depthzero
