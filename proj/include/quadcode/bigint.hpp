#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quadcode {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace quadcode
