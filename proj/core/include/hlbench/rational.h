#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlbench {

// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" in lowest terms; integers keep the "/1".
inline std::string to_fraction(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// Parses "p/q" or an integer "p". Throws std::runtime_error on bad input.
Rational parse_fraction(const std::string& text);

// 2^{-n}
inline Rational inverse_power_of_two(int n) {
  return Rational(BigInt(1), BigInt(1) << n);
}

}  // namespace hlbench
