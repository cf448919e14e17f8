#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "rsc/errors.hpp"

namespace rsc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat acc = 1, b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

inline Int int_pow(Int base, unsigned exp) {
    Int acc = 1;
    while (exp) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

inline Int factorial(unsigned n) {
    Int acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

/// Emits "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Accepts "p", "-p", or "p/q" with q > 0.
inline Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw validation_error("rational denominator must be positive: " + text);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw validation_error("cannot parse rational: " + text);
    }
}

inline std::vector<std::string> rats_to_strings(const std::vector<Rat>& rs) {
    std::vector<std::string> out;
    out.reserve(rs.size());
    for (const auto& r : rs) out.push_back(rat_to_string(r));
    return out;
}

} // namespace rsc
