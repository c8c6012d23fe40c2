#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace fibsigma {

// Below the threshold (and within 64 bits) answers are deterministic via a
// fixed strong-probable-prime witness set. Above it, `rounds` random-base
// strong tests plus one strong Lucas test: composite answers are certain,
// prime answers fail with probability at most 4^-rounds.
struct PrimalityConfig {
  enum class Mode { deterministic_small, probabilistic };

  Mode mode = Mode::probabilistic;
  unsigned rounds = 64;
  mpz_class threshold = max_deterministic();  // largest value handled deterministically
  std::uint64_t witness_seed = 0x66b5eed5u;

  static mpz_class max_deterministic();  // 2^64 - 1

  void validate() const;  // rounds >= 40 required in probabilistic mode
};

bool is_prime(const mpz_class& n, const PrimalityConfig& cfg = {});

// Deterministic for all 64-bit inputs (witnesses 2..37).
bool is_prime_u64(std::uint64_t n) noexcept;

// Exposed for targeted tests; n odd, > 5, not a perfect square is assumed
// handled by the caller (is_prime takes care of it).
bool strong_lucas_probable_prime(const mpz_class& n);

}  // namespace fibsigma
