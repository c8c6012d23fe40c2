#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fibsigma/fib.hpp"
#include "fibsigma/verify.hpp"

using namespace fibsigma;

namespace {

// Independent oracle: plain iteration in both directions.
std::map<long, mpz_class> naive_range(long alpha, long lo, long hi) {
  std::map<long, mpz_class> f;
  f[0] = 0;
  f[1] = 1;
  for (long n = 1; n < hi; ++n) f[n + 1] = alpha * f[n] + f[n - 1];
  for (long n = 1; n > lo; --n) f[n - 1] = f[n + 1] - alpha * f[n];
  return f;
}

}  // namespace

TEST_CASE("alpha=3 sequence values") {
  Alpha a(3);
  CHECK(fib_at(a, 0) == 0);
  CHECK(fib_at(a, 1) == 1);
  CHECK(fib_at(a, 2) == 3);
  CHECK(fib_at(a, 3) == 10);
  CHECK(fib_at(a, 4) == 33);
  CHECK(fib_at(a, 5) == 109);
  CHECK(fib_at(a, 6) == 360);
  CHECK(fib_at(a, -4) == -33);
  CHECK(fib_at(a, -5) == 109);  // alpha^4 + 3 alpha^2 + 1
  CHECK(fib_at(a, -1) == 1);
  CHECK(fib_at(a, -2) == -3);
}

TEST_CASE("fast doubling equals naive iteration") {
  for (long alpha : {1L, 2L, 3L, 4L, 7L, 55L}) {
    Alpha a(alpha);
    auto naive = naive_range(alpha, -501, 501);
    for (long n = -500; n <= 500; ++n) {
      REQUIRE(fib_at(a, n) == naive[n]);
    }
  }
}

TEST_CASE("alpha must be positive") {
  CHECK_THROWS_AS(Alpha(0), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(-3), std::invalid_argument);
}

TEST_CASE("table holds every value up to the bound plus one sentinel") {
  FibTable t(Alpha(3), 360);
  REQUIRE(t.top_index() == 6);
  CHECK(t.at(1) == 1);
  CHECK(t.at(2) == 3);
  CHECK(t.at(3) == 10);
  CHECK(t.at(4) == 33);
  CHECK(t.at(5) == 109);
  CHECK(t.at(6) == 360);
  CHECK(t.at(7) == 1189);  // sentinel above the bound
  CHECK_THROWS_AS(t.at(8), std::out_of_range);
  CHECK_THROWS_AS(t.at(0), std::out_of_range);

  FibTable tiny(Alpha(3), 1);
  REQUIRE(tiny.top_index() == 1);
  CHECK(tiny.at(1) == 1);
  CHECK(tiny.at(2) == 3);

  FibTable four(Alpha(4), 100);
  REQUIRE(four.top_index() == 4);
  CHECK(four.at(1) == 1);
  CHECK(four.at(2) == 4);
  CHECK(four.at(3) == 17);
  CHECK(four.at(4) == 72);
  CHECK(four.at(5) == 305);

  CHECK_THROWS_AS(FibTable(Alpha(3), 0), std::invalid_argument);
}

TEST_CASE("table recurrence invariant") {
  for (long alpha : {1L, 3L, 5L}) {
    FibTable t(Alpha(alpha), 100000);
    for (long i = 3; i <= t.size(); ++i)
      REQUIRE(t.at(i) == alpha * t.at(i - 1) + t.at(i - 2));
  }
}

TEST_CASE("ind examples and error cases") {
  Alpha a(3);
  CHECK(ind(a, 109) == 5);
  CHECK(ind(a, 1) == 1);
  CHECK(ind(a, 359) == 5);
  CHECK(ind(a, 360) == 6);
  CHECK_THROWS_AS(ind(a, 0), std::domain_error);
  CHECK_THROWS_AS(ind(Alpha(2), 5), std::domain_error);

  FibTable t(a, 1000);
  CHECK(t.ind(109) == 5);
  CHECK(t.ind(359) == 5);
  CHECK(t.ind(1) == 1);
  for (long n = 1; n <= 1000; ++n) REQUIRE(t.ind(n) == ind(a, n));
}

TEST_CASE("ind upper bound contract") {
  Alpha a(3);
  CHECK(Real(ind(a, 109)) < ind_upper_bound(a, 109));
  const mpz_class million = 1000000;
  const Real bound = ind_upper_bound(a, million);
  // log(10^6)/log(phi_3) + 2 is about 13.56; the largest F_k <= 10^6 is F_12.
  CHECK(static_cast<double>(bound) == doctest::Approx(13.5634).epsilon(1e-3));
  CHECK(ind(a, million) == 12);
  CHECK(Real(ind(a, million)) < bound);

  Alpha big(55);
  CHECK(ind(big, 2) == 1);
  CHECK(Real(1) < ind_upper_bound(big, 2));
  CHECK(static_cast<double>(ind_upper_bound(big, 2)) >= 2.0);
}

TEST_CASE("partial sum closed form") {
  for (long alpha : {3L, 4L, 5L}) {
    Alpha a(alpha);
    mpz_class direct = 0;
    for (long n = 1; n <= 120; ++n) {
      direct += fib_at(a, n);
      REQUIRE(fib_partial_sum(a, n) == direct);
      REQUIRE(alpha * direct < (alpha + 2) * fib_at(a, n));
    }
  }
}

TEST_CASE("phi value and defining equation") {
  for (long alpha : {3L, 4L, 55L}) {
    const PhiAlpha phi = phi_alpha(Alpha(alpha));
    CHECK(phi.value > alpha);
    CHECK(abs(phi.value * phi.value - alpha * phi.value - 1) < 16 * real_epsilon() * phi.value * phi.value);
  }
  CHECK(static_cast<double>(phi_alpha(Alpha(3)).value) == doctest::Approx(3.302775637731995));
}

TEST_CASE("facts22 statement suite passes at reduced scale") {
  verify::Scales scales;
  scales.nmax = 120;  // recurrence span
  const auto report = verify::run_suite("facts22", scales);
  for (const auto& st : report.statements) {
    INFO(st.name);
    CHECK(st.violations == 0);
  }
}
