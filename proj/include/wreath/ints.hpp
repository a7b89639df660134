#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

/// Arbitrary-precision integer used for face counts and group orders.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number used for all polytope geometry.
using Rat = boost::multiprecision::cpp_rational;

Int binomial(long n, long k);
Int int_pow(Int base, unsigned long exp);
Int factorial(long n);

}  // namespace wreath
