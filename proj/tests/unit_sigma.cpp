#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "fibsigma/sigma.hpp"
#include "fibsigma/verify.hpp"

using namespace fibsigma;

namespace {

std::vector<long> tiny_primes(long limit) {
  std::vector<long> out;
  for (long n = 2; n <= limit; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("divisor sets") {
  Alpha a(3);
  CHECK(divisor_set(a, 110).divisors == std::vector<mpz_class>{1, 10});
  CHECK(divisor_set(a, 1).divisors == std::vector<mpz_class>{1});
  CHECK(divisor_set(a, 1199).divisors == std::vector<mpz_class>{1, 109});
  CHECK_THROWS_AS(divisor_set(a, 0), std::domain_error);
  CHECK_THROWS_AS(divisor_set(Alpha(2), 10), std::domain_error);
}

TEST_CASE("sigma values from the worked example") {
  Alpha a(3);
  CHECK(sigma(a, 2) == 1);
  CHECK(sigma(a, 3) == 4);
  CHECK(sigma(a, 4) == 1);
  CHECK(sigma(a, 109) == 110);
  CHECK(sigma(a, 110) == 11);
  CHECK(sigma(a, 11) == 1);
}

TEST_CASE("divisor set contract and brute-force sigma oracle") {
  // Oracle sums every d <= n that divides n and is a sequence member, with
  // membership decided by set lookup instead of the table scan.
  for (long alpha : {3L, 5L}) {
    Alpha a(alpha);
    std::set<long> members;
    for (long prev = 0, cur = 1; cur <= 500; ) {
      members.insert(cur);
      const long next = alpha * cur + prev;
      prev = cur;
      cur = next;
    }
    FibTable table(a, 500);
    for (long n = 1; n <= 500; ++n) {
      long brute = 0;
      for (long d = 1; d <= n; ++d)
        if (n % d == 0 && members.count(d)) brute += d;
      REQUIRE(sigma(table, n) == brute);

      const DivisorSet ds = divisor_set(table, n);
      REQUIRE(!ds.divisors.empty());
      REQUIRE(ds.divisors.front() == 1);
      for (std::size_t i = 0; i < ds.divisors.size(); ++i) {
        REQUIRE(mpz_divisible_p(mpz_class(n).get_mpz_t(), ds.divisors[i].get_mpz_t()));
        REQUIRE(members.count(static_cast<long>(ds.divisors[i].get_si())) == 1);
        if (i > 0) REQUIRE(ds.divisors[i - 1] < ds.divisors[i]);
      }
    }
  }
}

TEST_CASE("trace entries are consecutive sigma values") {
  Alpha a(3);
  for (long n : {2L, 109L, 777L, 4096L}) {
    const SigmaTrace trace = ord_trace(a, n);
    for (std::size_t j = 0; j + 1 < trace.iterates.size(); ++j)
      REQUIRE(sigma(a, trace.iterates[j]) == trace.iterates[j + 1]);
    REQUIRE(trace.iterates.back() == 1);
  }
}

TEST_CASE("sigma iteration") {
  Alpha a(3);
  CHECK(sigma_iterate(a, 109, 3) == 1);
  CHECK(sigma_iterate(a, 5, 0) == 5);
  CHECK(sigma_iterate(a, 110, 1) == 11);
}

TEST_CASE("ord traces") {
  Alpha a(3);
  CHECK(ord_trace(a, 1).ord() == 0);

  const SigmaTrace t109 = ord_trace(a, 109);
  CHECK(t109.ord() == 3);
  CHECK(t109.iterates == std::vector<mpz_class>{109, 110, 11, 1});

  // sigma(F_11 + 1) = F_5 + 1 by the shifted closed form with p = 5.
  const mpz_class start = fib_at(a, 11) + 1;
  const SigmaTrace big = ord_trace(a, start);
  REQUIRE(big.iterates.size() >= 2);
  CHECK(big.iterates[1] == fib_at(a, 5) + 1);
  CHECK(big.iterates == std::vector<mpz_class>{start, 110, 11, 1});
}

TEST_CASE("trace indices strictly decrease after the first step") {
  Alpha a(3);
  FibTable table(a, 5000);
  for (long n = 2; n <= 2000; ++n) {
    const SigmaTrace trace = ord_trace(table, n);
    for (std::size_t j = 1; j + 1 < trace.iterates.size(); ++j) {
      REQUIRE(table.ind(trace.iterates[j + 1]) < table.ind(trace.iterates[j]));
    }
  }
}

TEST_CASE("index fast path equals the value scan") {
  for (long alpha : {3L, 4L}) {
    Alpha a(alpha);
    FibTable table(a, fib_at(a, 201));
    for (long m = 1; m <= 200; ++m) {
      REQUIRE(sigma_of_fib(a, m) == sigma(table, table.at(m)));
    }
  }
  CHECK(sigma_of_fib(Alpha(3), 6) == 374);
  CHECK(sigma_of_fib(Alpha(3), 1) == 1);
  CHECK(sigma_of_fib(Alpha(3), 7) == 1190);
  CHECK(sigma_of_fib(Alpha(3), 7) == sigma(Alpha(3), 1189));
}

TEST_CASE("ord of F_m via the index route equals the plain route") {
  Alpha a(3);
  for (long m : {1L, 2L, 5L, 6L, 11L, 23L, 47L, 60L}) {
    const SigmaTrace lhs = ord_trace_of_fib(a, m);
    const SigmaTrace rhs = ord_trace(a, fib_at(a, m));
    CHECK(lhs.iterates == rhs.iterates);
  }
}

TEST_CASE("sum identity factored form equals the direct sum") {
  CHECK(sum_identity(Alpha(3), 4, 1) == 119);
  CHECK(sum_identity(Alpha(3), 2, 2) == 33);
  CHECK(sum_identity(Alpha(3), 1, 1) == 3);
  CHECK_THROWS_AS(sum_identity(Alpha(3), 1, 2), std::invalid_argument);
  for (long alpha : {3L, 4L}) {
    Alpha a(alpha);
    for (long m = 1; m <= 40; ++m)
      for (long n = 1; n <= m; ++n)
        REQUIRE(sum_identity(a, m, n) == fib_at(a, m + n) + fib_at(a, m - n));
  }
}

TEST_CASE("wing closed form") {
  CHECK(sigma_wing(Alpha(3), 2) == 1);
  CHECK(sigma_wing(Alpha(3), 3) == 4);
  CHECK(sigma_wing(Alpha(5), 7) == 6);
  for (long alpha : {3L, 4L, 5L}) {
    Alpha a(alpha);
    for (long m = 1; m <= 40; ++m)
      REQUIRE(sigma_wing(a, m) == sigma(a, fib_at(a, m + 1) + fib_at(a, m - 1)));
  }
}

TEST_CASE("shifted closed form") {
  Alpha a(3);
  CHECK(sigma_shifted(a, 5, 2) == 110);
  CHECK(sigma_shifted(a, 5, 3) == 113);
  CHECK(sigma_shifted(a, 2, 1) == 1);
  CHECK(sigma_shifted(a, 2, 3) == 11);
  CHECK_THROWS_AS(sigma_shifted(a, 5, 5), std::domain_error);
  CHECK_THROWS_AS(sigma_shifted(a, 5, 10), std::domain_error);
  CHECK_THROWS_AS(sigma_shifted(a, 2, 2), std::domain_error);
  CHECK_THROWS_AS(sigma_shifted(a, 9, 2), std::invalid_argument);
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long m = 1; m < 2 * p; ++m) {
      if (m == p) continue;
      REQUIRE(sigma_shifted(a, p, m) == sigma(a, fib_at(a, m + p) + fib_at(a, m - p)));
    }
  }
}

TEST_CASE("neighbor-prime double step equivalence") {
  const std::vector<long> alphas345 = {3, 4, 5};
  const std::vector<long> alpha3 = {3};

  const auto r1 = double_step_equivalence(alphas345, 7, 3);
  CHECK(r1.index_relation);
  CHECK(r1.some_alpha);
  CHECK(r1.all_alpha);

  const auto r2 = double_step_equivalence(alpha3, 5, 3);
  CHECK(r2.index_relation);  // 5 = 2*3 - 1
  CHECK(r2.some_alpha);

  const auto r3 = double_step_equivalence(alpha3, 7, 5);
  CHECK_FALSE(r3.index_relation);
  CHECK_FALSE(r3.some_alpha);
  CHECK_FALSE(r3.all_alpha);

  CHECK_THROWS_AS(double_step_equivalence(alpha3, 9, 3), std::invalid_argument);
  CHECK_THROWS_AS(double_step_equivalence(alpha3, 2, 3), std::invalid_argument);

  for (long p : tiny_primes(60)) {
    if (p == 2) continue;
    for (long q : tiny_primes(60)) {
      if (q == 2) continue;
      REQUIRE(double_step_equivalence(alphas345, p, q).consistent());
    }
  }
}

TEST_CASE("refined ord regime diagnostics") {
  // The crossover claimed from computer calculation; ours reproduces it.
  CHECK(refined_ord_alpha_threshold() == 2981);
  const Real log_a55 = log(refined_ord_cutoff(Alpha(55), Real(1) / 4));
  CHECK(static_cast<double>(log_a55) == doctest::Approx(2092.1364).epsilon(1e-4));
  CHECK_THROWS_AS(refined_ord_cutoff(Alpha(3), Real(1) / 4), std::domain_error);
}

TEST_CASE("running maxima reports") {
  const RunningMax c = c_alpha_estimate(Alpha(3), 500);
  CHECK(c.value > 0.0);
  CHECK(c.argument >= 2);
  const RunningMax d = d_alpha_estimate(Alpha(3), 3000);
  CHECK(d.value > 0.0);
  CHECK(d.argument >= 3);
}

TEST_CASE("ord_of_fib_range is consistent and thread-count independent") {
  const auto one = ord_of_fib_range(Alpha(3), 120, 1);
  const auto four = ord_of_fib_range(Alpha(3), 120, 4);
  REQUIRE(one == four);
  CHECK(one[2] == 2);
  CHECK(one[5] == 3);   // ord(F_5) = ord(109)
  CHECK(one[47] == 6);  // end of the chain from seed 2
  for (long n : {2L, 17L, 60L, 119L}) {
    REQUIRE(one[static_cast<std::size_t>(n)] == ord_trace(Alpha(3), fib_at(Alpha(3), n)).ord());
  }
}

TEST_CASE("reduced-scale bound suites pass") {
  verify::Scales scales;
  scales.nmax = 5000;
  for (const char* suite : {"lemma27", "thm28", "thm43", "thm44", "thm45"}) {
    const auto report = verify::run_suite(suite, scales);
    INFO(suite);
    CHECK(report.pass());
  }
}
