#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "fibsigma/alpha.hpp"
#include "fibsigma/primality.hpp"

namespace fibsigma {

// First kind iterates p -> 2p+1, second kind p -> 2p-1.
enum class ChainKind : int { first = +1, second = -1 };

inline int kind_sign(ChainKind k) noexcept { return static_cast<int>(k); }
const char* kind_label(ChainKind k) noexcept;  // "+1" / "-1"

mpz_class chain_successor(const mpz_class& p, ChainKind kind);

// A maximal chain: every element prime, breaker = first composite successor.
struct ChainRecord {
  ChainKind kind;
  mpz_class seed;
  std::vector<mpz_class> elements;
  mpz_class breaker;

  std::size_t length() const noexcept { return elements.size(); }
};

// Walks successors from a prime seed until the first composite.
ChainRecord build_chain(const mpz_class& seed, ChainKind kind, const PrimalityConfig& cfg = {});

std::size_t chain_length(const mpz_class& seed, ChainKind kind, const PrimalityConfig& cfg = {});

// True when the chain cannot be extended backwards: (seed -/+ 1)/2 is not prime.
bool is_chain_start(const mpz_class& seed, ChainKind kind, const PrimalityConfig& cfg = {});

// Every prime p <= limit counts as a seed with its own length l(p); records are
// kept for l(p) >= min_length (optionally restricted to chain starts), counts
// cover every length under both views. Deterministic for any thread count.
struct ScanSummary {
  ChainKind kind;
  std::uint64_t limit;
  std::size_t min_length;
  std::vector<ChainRecord> records;
  std::map<std::size_t, std::size_t> count_by_length;
  std::map<std::size_t, std::size_t> start_count_by_length;
  std::size_t max_length = 0;  // k(limit)

  std::size_t count_at_least(std::size_t k, bool starts_only = false) const;
};

// min_length == no_records suppresses record collection (counts only).
inline constexpr std::size_t no_records = static_cast<std::size_t>(-1);

ScanSummary scan_chains(std::uint64_t limit, ChainKind kind, std::size_t min_length,
                        const PrimalityConfig& cfg = {}, unsigned threads = 1,
                        bool starts_only = false);

// l(p) < p/2 for every prime 7 <= p <= limit, both kinds.
bool verify_remark15(std::uint64_t limit, const PrimalityConfig& cfg = {}, unsigned threads = 1);

// The chain/ord bridge for one odd prime seed:
//   l(p) - 1 = ord(F_last) - ord(F_p), plus the one-step identity
//   sigma(F_{2p+/-1} + 1) = F_p + 1 whenever the chain has length >= 2.
struct Cor34Check {
  ChainRecord chain;
  std::size_t ord_seed;
  std::size_t ord_last;
  bool iteration_ok;
  bool one_step_ok;  // true (vacuously) for length-1 chains

  bool ok() const noexcept { return iteration_ok && one_step_ok; }
};

Cor34Check verify_cor34(Alpha alpha, long p, ChainKind kind, const PrimalityConfig& cfg = {});

}  // namespace fibsigma
