#include "fibsigma/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace fibsigma {

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<char> is_prime(limit + 1, 1);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (is_prime[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) is_prime[j] = 0;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (is_prime[i]) out.push_back(i);
  return out;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                           const std::vector<std::uint64_t>& base_primes) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<char> sieve(n, 1);
  for (std::uint64_t p : base_primes) {
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j <= hi; j += p) sieve[static_cast<std::size_t>(j - lo)] = 0;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (sieve[i]) out.push_back(lo + i);
  return out;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint64_t> base = small_primes(root);
  const std::uint64_t segment = 1u << 18;
  for (std::uint64_t lo = 2; lo <= limit; lo += segment) {
    const std::uint64_t hi = std::min(limit, lo + segment - 1);
    auto part = primes_in_range(lo, hi, base);
    out.insert(out.end(), part.begin(), part.end());
    if (hi == limit) break;
  }
  return out;
}

std::uint64_t count_primes_upto(std::uint64_t limit) {
  return static_cast<std::uint64_t>(primes_upto(limit).size());
}

}  // namespace fibsigma
