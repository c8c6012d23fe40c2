#include "fibsigma/chains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fibsigma/parallel.hpp"
#include "fibsigma/sieve.hpp"
#include "fibsigma/sigma.hpp"

namespace fibsigma {

const char* kind_label(ChainKind k) noexcept {
  return k == ChainKind::first ? "+1" : "-1";
}

mpz_class chain_successor(const mpz_class& p, ChainKind kind) {
  return 2 * p + kind_sign(kind);
}

ChainRecord build_chain(const mpz_class& seed, ChainKind kind, const PrimalityConfig& cfg) {
  if (!is_prime(seed, cfg)) throw std::invalid_argument("build_chain: seed is not prime");
  ChainRecord rec{kind, seed, {seed}, 0};
  mpz_class next = chain_successor(seed, kind);
  while (is_prime(next, cfg)) {
    rec.elements.push_back(next);
    next = chain_successor(next, kind);
  }
  rec.breaker = std::move(next);
  return rec;
}

std::size_t chain_length(const mpz_class& seed, ChainKind kind, const PrimalityConfig& cfg) {
  return build_chain(seed, kind, cfg).length();
}

bool is_chain_start(const mpz_class& seed, ChainKind kind, const PrimalityConfig& cfg) {
  mpz_class pred = seed - kind_sign(kind);
  if (mpz_odd_p(pred.get_mpz_t())) return true;  // predecessor not an integer
  pred >>= 1;
  if (pred < 2) return true;
  return !is_prime(pred, cfg);
}

namespace {

// Length walk specialised to 64-bit seeds; falls back to mpz only if a chain
// climbs past the 64-bit range (cannot happen for the scans we run, but the
// guard keeps the result exact regardless).
std::size_t chain_length_u64(std::uint64_t seed, ChainKind kind, const PrimalityConfig& cfg) {
  const bool up = kind == ChainKind::first;
  std::uint64_t cur = seed;
  std::size_t len = 1;
  for (;;) {
    if (cur > (UINT64_MAX - 1) / 2) return len - 1 + chain_length(cur, kind, cfg);
    const std::uint64_t next = up ? 2 * cur + 1 : 2 * cur - 1;
    if (!is_prime_u64(next)) return len;
    cur = next;
    ++len;
  }
}

bool is_chain_start_u64(std::uint64_t seed, ChainKind kind) {
  const std::uint64_t adjusted = kind == ChainKind::first ? seed - 1 : seed + 1;
  if (adjusted % 2 != 0) return true;
  const std::uint64_t pred = adjusted / 2;
  return pred < 2 || !is_prime_u64(pred);
}

}  // namespace

std::size_t ScanSummary::count_at_least(std::size_t k, bool starts_only) const {
  const auto& counts = starts_only ? start_count_by_length : count_by_length;
  std::size_t total = 0;
  for (const auto& [len, cnt] : counts)
    if (len >= k) total += cnt;
  return total;
}

ScanSummary scan_chains(std::uint64_t limit, ChainKind kind, std::size_t min_length,
                        const PrimalityConfig& cfg, unsigned threads, bool starts_only) {
  if (limit < 2) throw std::invalid_argument("scan_chains: limit must be >= 2");
  cfg.validate();

  struct Segment {
    std::map<std::size_t, std::size_t> counts;
    std::map<std::size_t, std::size_t> start_counts;
    std::vector<std::uint64_t> record_seeds;
    std::size_t max_len = 0;
  };

  // Fixed segmentation: identical output for every thread count.
  const std::uint64_t segment_size = 1u << 16;
  const std::size_t segments = static_cast<std::size_t>((limit - 2) / segment_size) + 1;
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint64_t> base = small_primes(root);

  std::vector<Segment> results(segments);
  parallel_for_blocks(segments, threads, [&](std::size_t si) {
    const std::uint64_t lo = 2 + si * segment_size;
    const std::uint64_t hi = std::min(limit, lo + segment_size - 1);
    Segment& seg = results[si];
    for (std::uint64_t p : primes_in_range(lo, hi, base)) {
      const std::size_t len = chain_length_u64(p, kind, cfg);
      ++seg.counts[len];
      const bool start = is_chain_start_u64(p, kind);
      if (start) ++seg.start_counts[len];
      seg.max_len = std::max(seg.max_len, len);
      if (min_length != no_records && len >= min_length && (!starts_only || start))
        seg.record_seeds.push_back(p);
    }
  });

  ScanSummary out{kind, limit, min_length, {}, {}, {}, 0};
  for (const Segment& seg : results) {
    for (const auto& [len, cnt] : seg.counts) out.count_by_length[len] += cnt;
    for (const auto& [len, cnt] : seg.start_counts) out.start_count_by_length[len] += cnt;
    out.max_length = std::max(out.max_length, seg.max_len);
    for (std::uint64_t seed : seg.record_seeds)
      out.records.push_back(build_chain(mpz_class(static_cast<unsigned long>(seed)), kind, cfg));
  }
  return out;
}

bool verify_remark15(std::uint64_t limit, const PrimalityConfig& cfg, unsigned threads) {
  if (limit < 7) throw std::invalid_argument("verify_remark15: limit must be >= 7");
  std::atomic<bool> ok{true};
  const std::vector<std::uint64_t> primes = primes_upto(limit);
  const std::size_t block = 2048;
  const std::size_t blocks = (primes.size() + block - 1) / block;
  parallel_for_blocks(blocks, threads, [&](std::size_t bi) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const std::size_t begin = bi * block;
    const std::size_t end = std::min(primes.size(), begin + block);
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t p = primes[i];
      if (p < 7) continue;
      for (ChainKind kind : {ChainKind::first, ChainKind::second}) {
        if (2 * chain_length_u64(p, kind, cfg) >= p) {
          ok.store(false, std::memory_order_relaxed);
          return;
        }
      }
    }
  });
  return ok.load();
}

Cor34Check verify_cor34(Alpha alpha, long p, ChainKind kind, const PrimalityConfig& cfg) {
  alpha.require_at_least(3);
  if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("verify_cor34: p must be an odd prime");

  ChainRecord chain = build_chain(mpz_class(p), kind, cfg);
  if (!chain.elements.back().fits_slong_p())
    throw std::invalid_argument("verify_cor34: chain end too large for an index");
  const long last = static_cast<long>(chain.elements.back().get_si());

  FibTable table(alpha, fib_at(alpha, last));
  const std::size_t ord_seed = ord_trace_of_fib(table, p).ord();
  const std::size_t ord_last = ord_trace_of_fib(table, last).ord();

  Cor34Check check{std::move(chain), ord_seed, ord_last, false, true};
  check.iteration_ok = (ord_last - ord_seed == check.chain.length() - 1);
  if (check.chain.length() >= 2) {
    const long second = static_cast<long>(check.chain.elements[1].get_si());
    check.one_step_ok = sigma(table, table.at(second) + 1) == table.at(p) + 1;
  }
  return check;
}

}  // namespace fibsigma
