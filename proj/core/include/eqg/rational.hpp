#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace eqg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int intPow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Rat ratPow(const Rat& base, unsigned exp) {
    Rat r = 1;
    Rat b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// N(N-1)...(N-m+1); zero once the factors cross zero.
inline Int fallingFactorial(Int n, unsigned m) {
    Int r = 1;
    for (unsigned i = 0; i < m; ++i) r *= n - i;
    return r;
}

inline Int factorial(unsigned n) { return fallingFactorial(Int(n), n); }

inline std::string numString(const Rat& r) { return boost::multiprecision::numerator(r).str(); }
inline std::string denString(const Rat& r) { return boost::multiprecision::denominator(r).str(); }

} // namespace eqg
