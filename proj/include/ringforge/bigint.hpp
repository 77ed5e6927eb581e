#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ringforge {

// All exact integer arithmetic in the library runs on an arbitrary-precision
// integer. Coefficients stay small in the symbolic identities but norms and
// resultants of random elements do not.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

inline std::string to_string(const BigInt& a) { return a.str(); }

inline bool fits_int64(const BigInt& a) {
    static const BigInt lo = BigInt(INT64_MIN);
    static const BigInt hi = BigInt(INT64_MAX);
    return a >= lo && a <= hi;
}

} // namespace ringforge
