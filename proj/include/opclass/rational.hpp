#pragma once
// Exact rational scalar used by the weight-algebra code paths. Backed by
// boost::multiprecision::cpp_rational, which keeps values in reduced form
// with a positive denominator and uses arbitrary-precision integers, so
// products like r^3 s / (t^3 u^3) never overflow or round.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "opclass/errors.hpp"

namespace opclass {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw Error("rational_pow: zero base with negative exponent");
        return rational_pow(Rational(1) / base, -exp);
    }
    Rational acc(1), b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1UL) acc *= b;
        b *= b;
        e >>= 1UL;
    }
    return acc;
}

// Exact conversion: every finite double is a dyadic rational m * 2^e.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite value cannot be converted to a rational");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(m);
    if (exp >= 0) {
        r *= rational_pow(Rational(2), exp);
    } else {
        r /= rational_pow(Rational(2), -exp);
    }
    return r;
}

// Accepts "p/q", plain integers, and decimal strings ("0.9" -> 9/10).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("malformed rational literal '" + text + "'");
        const std::size_t frac_len = text.size() - dot - 1;
        Rational r(BigInt(digits));
        for (std::size_t i = 0; i < frac_len; ++i) r /= 10;
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal '" + text + "'");
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace opclass
