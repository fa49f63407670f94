#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurres {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t to_int64(const BigInt& v)
{
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

/// Binomial coefficient; 0 outside 0 <= k <= n.
inline BigInt binomial_big(std::int64_t n, std::int64_t k)
{
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) { return to_int64(binomial_big(n, k)); }

}  // namespace schurres
