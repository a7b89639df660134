#include "wreath/ints.hpp"

#include <stdexcept>

namespace wreath {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int int_pow(Int base, unsigned long exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace wreath
