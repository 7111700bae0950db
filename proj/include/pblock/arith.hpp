#pragma once

#include <cstdint>

namespace pblock {

constexpr bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Exponent of p in n (n > 0).
constexpr unsigned p_valuation(std::uint64_t n, std::uint64_t p)
{
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

constexpr std::uint64_t ipow(std::uint64_t base, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= base;
  return r;
}

constexpr std::uint64_t p_part(std::uint64_t n, std::uint64_t p) { return ipow(p, p_valuation(n, p)); }

constexpr bool is_p_power(std::uint64_t n, std::uint64_t p) { return n > 0 && p_part(n, p) == n; }

} // namespace pblock
