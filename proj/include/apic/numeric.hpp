#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "apic/errors.hpp"

namespace apic {

// All group-theoretic answers are exact; a single wrong invariant factor
// changes the isomorphism type, so no floating point appears anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt big_pow(BigInt base, unsigned long long e) {
    BigInt out = 1;
    while (e > 0) {
        if (e & 1ULL) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline Rational rat_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw invalid_argument_error("zero to a negative power");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational out = 1, b = base;
    auto k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1ULL) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

// Accepts "p", "p/q" with optional sign; used by parsers and JSON input.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw parse_error("invalid rational literal '" + text + "'");
    }
}

}  // namespace apic
