#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fibsigma/analytic.hpp"
#include "fibsigma/chains.hpp"
#include "fibsigma/sieve.hpp"

using namespace fibsigma;

TEST_CASE("deterministic primality on 64-bit inputs") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK(is_prime_u64(47));
  CHECK_FALSE(is_prime_u64(95));
  CHECK_FALSE(is_prime_u64(561));         // Carmichael
  CHECK_FALSE(is_prime_u64(41041));       // Carmichael
  CHECK_FALSE(is_prime_u64(2047));        // strong pseudoprime base 2
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime bases 2,3,5,7
  CHECK(is_prime_u64(2305843009213693951ull));   // 2^61 - 1
  CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(18446744073709551615ull));

  // Agreement with a slow trial-division oracle.
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    REQUIRE(is_prime_u64(n) == prime);
  }
}

TEST_CASE("probabilistic path agrees with the deterministic one") {
  PrimalityConfig cfg;
  cfg.threshold = 100;  // force the Miller-Rabin + Lucas path early
  for (std::uint64_t n = 2; n <= 30000; ++n) {
    REQUIRE(is_prime(mpz_class(static_cast<unsigned long>(n)), cfg) == is_prime_u64(n));
  }
  // Known strong Lucas pseudoprimes must still be rejected by the combination.
  for (unsigned long n : {5459ul, 5777ul, 10877ul, 16109ul, 18971ul}) {
    CHECK_FALSE(is_prime(mpz_class(n), cfg));
  }
}

TEST_CASE("the Lucas ladder matches the reference pseudoprime sequence") {
  // Composites below 10^5 that a correct strong Lucas test (Selfridge
  // parameters) must accept; any ladder bug would reject some of them.
  for (unsigned long n : {5459ul, 5777ul, 10877ul, 16109ul, 18971ul, 22499ul, 24569ul, 25199ul,
                          40309ul, 58519ul, 75077ul, 97439ul}) {
    CHECK(strong_lucas_probable_prime(mpz_class(n)));
    CHECK_FALSE(is_prime_u64(n));
  }
  for (unsigned long p : {5ul, 101ul, 65537ul, 99991ul, 2147483647ul}) {
    CHECK(strong_lucas_probable_prime(mpz_class(p)));
  }
  // No overlap: everything the ladder and a base-2 strong test both accept
  // below 10^5 is genuinely prime.
  mpz_class n;
  for (unsigned long v = 3; v <= 100000; v += 2) {
    n = v;
    if (strong_lucas_probable_prime(n) != is_prime_u64(v)) {
      // accepted by Lucas alone: must be one of the listed pseudoprimes
      const bool listed = v == 5459 || v == 5777 || v == 10877 || v == 16109 || v == 18971 ||
                          v == 22499 || v == 24569 || v == 25199 || v == 40309 || v == 58519 ||
                          v == 75077 || v == 97439;
      REQUIRE(listed);
    }
  }
}

TEST_CASE("primality configuration contracts") {
  PrimalityConfig weak;
  weak.rounds = 8;
  CHECK_THROWS_AS(is_prime(mpz_class(97), weak), std::invalid_argument);

  PrimalityConfig strict;
  strict.mode = PrimalityConfig::Mode::deterministic_small;
  strict.threshold = 1000;
  CHECK(is_prime(mpz_class(997), strict));
  CHECK_THROWS_AS(is_prime(mpz_class(100003), strict), std::domain_error);
}

TEST_CASE("big-integer primality") {
  CHECK(is_prime(mpz_class("2759832934171386593519")));
  CHECK(is_prime(mpz_class("42008163485623434922152331")));

  // Mersenne numbers with known status.
  const auto mersenne = [](unsigned e) {
    mpz_class m = 1;
    m <<= e;
    return mpz_class(m - 1);
  };
  CHECK(is_prime(mersenne(89)));
  CHECK(is_prime(mersenne(107)));
  CHECK(is_prime(mersenne(127)));
  CHECK_FALSE(is_prime(mersenne(83)));
  CHECK_FALSE(is_prime(mersenne(101)));
  CHECK_FALSE(is_prime(mersenne(97)));

  // Squares of large primes exercise the perfect-square rejection.
  CHECK_FALSE(is_prime(mersenne(89) * mersenne(89)));
  // Semiprime of two large primes.
  CHECK_FALSE(is_prime(mersenne(89) * mersenne(107)));

  // The witness seed changes the bases, never the verdict.
  PrimalityConfig other;
  other.witness_seed = 0xabcdef12u;
  CHECK(is_prime(mersenne(89), other));
  CHECK_FALSE(is_prime(mersenne(83), other));
}

TEST_CASE("randomized agreement between the two primality paths") {
  PrimalityConfig cfg;
  cfg.threshold = 2;  // everything odd goes through MR + Lucas
  cfg.rounds = 40;
  std::mt19937_64 rng(987654321);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = (rng() & ((1ull << 48) - 1)) | 1;
    REQUIRE(is_prime(mpz_class(static_cast<unsigned long>(n)), cfg) == is_prime_u64(n));
  }
}

TEST_CASE("chains from seed 2") {
  const ChainRecord up = build_chain(2, ChainKind::first);
  CHECK(up.length() == 5);
  CHECK(up.elements == std::vector<mpz_class>{2, 5, 11, 23, 47});
  CHECK(up.breaker == 95);

  const ChainRecord down = build_chain(2, ChainKind::second);
  CHECK(down.length() == 3);
  CHECK(down.elements == std::vector<mpz_class>{2, 3, 5});
  CHECK(down.breaker == 9);

  const ChainRecord seven = build_chain(7, ChainKind::first);
  CHECK(seven.length() == 1);
  CHECK(seven.breaker == 15);

  CHECK_THROWS_AS(build_chain(9, ChainKind::first), std::invalid_argument);
}

TEST_CASE("chain recurrence invariant") {
  for (long seed : {2L, 3L, 5L, 89L, 1122659L}) {
    for (ChainKind kind : {ChainKind::first, ChainKind::second}) {
      if (!is_prime_u64(static_cast<std::uint64_t>(seed))) continue;
      const ChainRecord rec = build_chain(seed, kind);
      const int sign = kind_sign(kind);
      mpz_class two_j = 1;
      for (std::size_t i = 0; i + 1 < rec.elements.size(); ++i)
        REQUIRE(rec.elements[i + 1] == chain_successor(rec.elements[i], kind));
      for (std::size_t j = 0; j < rec.elements.size(); ++j) {
        // closed form (p +/- 1) 2^j -/+ 1
        REQUIRE(rec.elements[j] == (rec.seed + sign) * two_j - sign);
        two_j *= 2;
      }
      REQUIRE(rec.breaker == (rec.seed + sign) * two_j - sign);
      REQUIRE(rec.breaker == chain_successor(rec.elements.back(), kind));
      for (const mpz_class& e : rec.elements)
        REQUIRE(mpz_probab_prime_p(e.get_mpz_t(), 32) != 0);
      REQUIRE(mpz_probab_prime_p(rec.breaker.get_mpz_t(), 32) == 0);
    }
  }
  // 1122659 starts a first-kind chain of length 7.
  CHECK(build_chain(1122659, ChainKind::first).length() == 7);
}

TEST_CASE("scan examples") {
  const ScanSummary scan = scan_chains(100, ChainKind::first, 4);
  REQUIRE(scan.records.size() == 3);  // seeds 2, 5, 89
  CHECK(scan.records[0].seed == 2);
  CHECK(scan.records[0].length() == 5);
  CHECK(scan.records[1].seed == 5);
  CHECK(scan.records[1].length() == 4);
  CHECK(scan.records[2].seed == 89);
  CHECK(scan.records[2].length() == 6);
  CHECK(scan.max_length == 6);

  const ScanSummary tiny = scan_chains(3, ChainKind::second, 3);
  REQUIRE(tiny.records.size() == 1);
  CHECK(tiny.records[0].seed == 2);
  CHECK(tiny.records[0].length() == 3);

  CHECK(scan_chains(2, ChainKind::first, 6).records.empty());
}

TEST_CASE("starts-only view") {
  const ScanSummary all = scan_chains(100, ChainKind::first, 2);
  const ScanSummary starts = scan_chains(100, ChainKind::first, 2, {}, 1, /*starts_only=*/true);
  CHECK(starts.records.size() < all.records.size());
  for (const ChainRecord& rec : starts.records)
    REQUIRE(is_chain_start(rec.seed, ChainKind::first));
  // 5 sits inside the chain generated by 2, so it is not a start.
  CHECK(is_chain_start(2, ChainKind::first));
  CHECK_FALSE(is_chain_start(5, ChainKind::first));
  CHECK_FALSE(is_chain_start(47, ChainKind::first));
  CHECK(is_chain_start(89, ChainKind::first));
  // Counts keep both views regardless of the record filter.
  CHECK(all.count_at_least(2) == starts.count_at_least(2));
  CHECK(all.count_at_least(2, true) == starts.count_at_least(2, true));
  CHECK(all.count_at_least(2, true) < all.count_at_least(2));
}

TEST_CASE("scan matches a naive single-threaded oracle") {
  for (ChainKind kind : {ChainKind::first, ChainKind::second}) {
    const ScanSummary scan = scan_chains(2000, kind, no_records, {}, 3);
    std::map<std::size_t, std::size_t> expected;
    std::size_t max_len = 0;
    for (std::uint64_t p : primes_upto(2000)) {
      mpz_class cur(static_cast<unsigned long>(p));
      std::size_t len = 1;
      for (;;) {
        mpz_class next = chain_successor(cur, kind);
        if (mpz_probab_prime_p(next.get_mpz_t(), 40) == 0) break;
        cur = next;
        ++len;
      }
      ++expected[len];
      max_len = std::max(max_len, len);
    }
    REQUIRE(scan.count_by_length == expected);
    REQUIRE(scan.max_length == max_len);
  }
}

TEST_CASE("scan is deterministic across thread counts") {
  const ScanSummary one = scan_chains(20000, ChainKind::first, 3, {}, 1);
  const ScanSummary four = scan_chains(20000, ChainKind::first, 3, {}, 4);
  REQUIRE(one.count_by_length == four.count_by_length);
  REQUIRE(one.start_count_by_length == four.start_count_by_length);
  REQUIRE(one.max_length == four.max_length);
  REQUIRE(one.records.size() == four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    REQUIRE(one.records[i].seed == four.records[i].seed);
    REQUIRE(one.records[i].elements == four.records[i].elements);
  }
}

TEST_CASE("length is bounded by the multiplicative order of 2") {
  for (std::uint64_t p : primes_upto(2000)) {
    if (p < 3) continue;
    const std::uint64_t bound = mult_order(p, 2);
    REQUIRE(chain_length(mpz_class(static_cast<unsigned long>(p)), ChainKind::first) <= bound);
    REQUIRE(chain_length(mpz_class(static_cast<unsigned long>(p)), ChainKind::second) <= bound);
  }
}

TEST_CASE("known record chains") {
  PrimalityConfig cfg;
  cfg.rounds = 64;
  const ChainRecord first = build_chain(mpz_class("2759832934171386593519"), ChainKind::first, cfg);
  CHECK(first.length() == 17);
  const ChainRecord second =
      build_chain(mpz_class("42008163485623434922152331"), ChainKind::second, cfg);
  CHECK(second.length() == 19);
}

TEST_CASE("remark15 bound") {
  CHECK(verify_remark15(7));
  CHECK(verify_remark15(13));
  CHECK(verify_remark15(10000, {}, 3));
}

TEST_CASE("cor34 bridge examples") {
  const Cor34Check a = verify_cor34(Alpha(3), 3, ChainKind::first);
  CHECK(a.ok());
  CHECK(a.chain.length() == 2);  // 3, 7
  CHECK(a.ord_last - a.ord_seed == 1);

  const Cor34Check b = verify_cor34(Alpha(3), 5, ChainKind::second);
  CHECK(b.ok());
  CHECK(b.chain.length() == 1);  // 9 is composite

  const Cor34Check c = verify_cor34(Alpha(3), 89, ChainKind::first);
  CHECK(c.ok());
  CHECK(c.chain.length() == 6);
  CHECK(c.ord_last - c.ord_seed == 5);

  CHECK_THROWS_AS(verify_cor34(Alpha(3), 4, ChainKind::first), std::invalid_argument);
  CHECK_THROWS_AS(verify_cor34(Alpha(2), 3, ChainKind::first), std::domain_error);
}
