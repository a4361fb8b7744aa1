#ifndef DDF_ARITH_HPP
#define DDF_ARITH_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "error.hpp"

namespace ddf {

/// Default upper bound on the order of any field or ring the library will build.
inline constexpr std::uint64_t kDefaultSizeBound = 1'000'000;

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// base^exp, throwing SizeExceeded instead of overflowing past `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                                 std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base)
      throw Error(ErrorKind::SizeExceeded, "power exceeds configured bound");
    out *= base;
  }
  return out;
}

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ddf

#endif  // DDF_ARITH_HPP
