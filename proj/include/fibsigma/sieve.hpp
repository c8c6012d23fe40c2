#pragma once

#include <cstdint>
#include <vector>

namespace fibsigma {

// Primes in [2, limit] via a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

// Primes in [lo, hi]; base_primes must contain all primes <= sqrt(hi).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                           const std::vector<std::uint64_t>& base_primes);

// Simple sieve, intended for base primes (limit around sqrt of the real range).
std::vector<std::uint64_t> small_primes(std::uint64_t limit);

std::uint64_t count_primes_upto(std::uint64_t limit);

}  // namespace fibsigma
