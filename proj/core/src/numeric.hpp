#pragma once

#include <complex>
#include <cstdint>

namespace ecc::detail {

/// x^e for a non-negative integer exponent by repeated squaring.
template <typename T>
T ipow(T x, int e) {
  T result(1);
  while (e > 0) {
    if (e & 1) result *= x;
    x *= x;
    e >>= 1;
  }
  return result;
}

/// Exact C(a, b) for results that fit in 64 bits.
inline std::uint64_t binomial_u64(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  __extension__ using u128 = unsigned __int128;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return static_cast<std::uint64_t>(r);
}

}  // namespace ecc::detail
