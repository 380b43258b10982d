#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pgt {

// All charge arithmetic is exact. Floating point would forge equalities
// between amounts like 7/12 and 2/9, so it is banned from this layer.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    return Rational(num, den);
}

/// Renders "p" for integers and "p/q" otherwise.
inline std::string rat_str(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace pgt
