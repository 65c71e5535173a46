#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gridndp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    // b > 0
    BigInt q = a / b;
    if (q * b < a) ++q;
    return q;
}

inline BigInt ceil_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (num >= 0) return ceil_div(num, den);
    return -((-num) / den);
}

inline BigInt floor_rational(const Rational& r) {
    return -ceil_rational(-r);
}

inline std::int64_t to_i64(const BigInt& v, const char* what = "value") {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t to_i64(const Rational& r, const char* what = "value") {
    if (!is_integral(r)) throw std::domain_error(std::string(what) + " is not an integer");
    return to_i64(BigInt(boost::multiprecision::numerator(r)), what);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
    if (is_integral(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

// Accepts "a", "a/b" and finite decimals like "0.1".
Rational parse_rational(const std::string& text);

}  // namespace gridndp
