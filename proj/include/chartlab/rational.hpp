#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace chartlab {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

BigInt factorial(long long n);

}  // namespace chartlab
