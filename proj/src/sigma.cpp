#include "fibsigma/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fibsigma/parallel.hpp"
#include "fibsigma/sieve.hpp"

namespace fibsigma {

namespace {

void require_positive(const mpz_class& n, const char* who) {
  if (n < 1) throw std::domain_error(std::string(who) + ": n must be >= 1");
}

std::vector<long> divisors_of(long m) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

DivisorSet divisor_set(const FibTable& table, const mpz_class& n) {
  table.alpha().require_at_least(3);
  require_positive(n, "divisor_set");
  const long k = table.ind(n);
  DivisorSet out{table.alpha(), n, {}};
  for (long i = 1; i <= k; ++i)
    if (mpz_divisible_p(n.get_mpz_t(), table.at(i).get_mpz_t())) out.divisors.push_back(table.at(i));
  return out;
}

DivisorSet divisor_set(Alpha alpha, const mpz_class& n) {
  alpha.require_at_least(3);
  require_positive(n, "divisor_set");
  FibTable table(alpha, n);
  return divisor_set(table, n);
}

mpz_class sigma(const FibTable& table, const mpz_class& n) {
  table.alpha().require_at_least(3);
  require_positive(n, "sigma");
  const long k = table.ind(n);
  mpz_class sum = 0;
  for (long i = 1; i <= k; ++i)
    if (mpz_divisible_p(n.get_mpz_t(), table.at(i).get_mpz_t())) sum += table.at(i);
  return sum;
}

mpz_class sigma(Alpha alpha, const mpz_class& n) {
  alpha.require_at_least(3);
  require_positive(n, "sigma");
  FibTable table(alpha, n);
  return sigma(table, n);
}

mpz_class sigma_of_fib(Alpha alpha, long m) {
  alpha.require_at_least(3);
  if (m < 1) throw std::domain_error("sigma_of_fib: index must be >= 1");
  mpz_class sum = 0;
  for (long d : divisors_of(m)) sum += fib_at(alpha, d);
  return sum;
}

mpz_class sigma_iterate(Alpha alpha, const mpz_class& n, unsigned long k) {
  alpha.require_at_least(3);
  require_positive(n, "sigma_iterate");
  if (k == 0) return n;
  // One table covers the whole orbit: every iterate stays below the sentinel.
  FibTable table(alpha, n);
  mpz_class cur = n;
  for (unsigned long i = 0; i < k; ++i) cur = sigma(table, cur);
  return cur;
}

namespace {

SigmaTrace trace_from(const FibTable& table, mpz_class start) {
  SigmaTrace trace{table.alpha(), {}};
  trace.iterates.push_back(std::move(start));
  // Termination cap well above the proven ord bound; only a bug can hit it.
  const std::size_t cap = 64 + 2 * mpz_sizeinbase(trace.iterates.front().get_mpz_t(), 2);
  while (trace.iterates.back() != 1) {
    trace.iterates.push_back(sigma(table, trace.iterates.back()));
    if (trace.iterates.size() > cap)
      throw std::logic_error("ord_trace: iteration failed to reach 1");
  }
  return trace;
}

}  // namespace

SigmaTrace ord_trace(const FibTable& table, const mpz_class& n) {
  table.alpha().require_at_least(3);
  require_positive(n, "ord_trace");
  return trace_from(table, n);
}

SigmaTrace ord_trace(Alpha alpha, const mpz_class& n) {
  alpha.require_at_least(3);
  require_positive(n, "ord_trace");
  FibTable table(alpha, n);
  return trace_from(table, n);
}

SigmaTrace ord_trace_of_fib(const FibTable& table, long m) {
  table.alpha().require_at_least(3);
  if (m < 1) throw std::domain_error("ord_trace_of_fib: index must be >= 1");
  if (m > table.top_index()) throw std::out_of_range("ord_trace_of_fib: table smaller than F_m");
  if (m == 1) return SigmaTrace{table.alpha(), {1}};  // F_1 = 1 is the fixed point
  mpz_class first = 0;
  for (long d : divisors_of(m)) first += table.at(d);
  SigmaTrace tail = trace_from(table, std::move(first));
  SigmaTrace trace{table.alpha(), {}};
  trace.iterates.reserve(tail.iterates.size() + 1);
  trace.iterates.push_back(table.at(m));
  trace.iterates.insert(trace.iterates.end(), tail.iterates.begin(), tail.iterates.end());
  return trace;
}

SigmaTrace ord_trace_of_fib(Alpha alpha, long m) {
  alpha.require_at_least(3);
  if (m < 1) throw std::domain_error("ord_trace_of_fib: index must be >= 1");
  FibTable table(alpha, fib_at(alpha, m));
  return ord_trace_of_fib(table, m);
}

std::size_t ord(Alpha alpha, const mpz_class& n) { return ord_trace(alpha, n).ord(); }

std::vector<std::size_t> ord_of_fib_range(Alpha alpha, long n_max, unsigned threads) {
  alpha.require_at_least(3);
  if (n_max < 2) throw std::invalid_argument("ord_of_fib_range: n_max must be >= 2");
  // sigma(F_n) < F_{n+1}, so a table bounded by F_{n_max + 1} covers every
  // orbit that starts at some F_n with n <= n_max.
  FibTable table(alpha, fib_at(alpha, n_max + 1));
  std::vector<std::size_t> ords(static_cast<std::size_t>(n_max) + 1, 0);
  const long block = 64;
  const std::size_t blocks = static_cast<std::size_t>((n_max - 1) / block) + 1;
  parallel_for_blocks(blocks, threads, [&](std::size_t bi) {
    const long begin = 2 + static_cast<long>(bi) * block;
    const long end = std::min(n_max, begin + block - 1);
    for (long n = begin; n <= end; ++n)
      ords[static_cast<std::size_t>(n)] = ord_trace_of_fib(table, n).ord();
  });
  return ords;
}

mpz_class sum_identity(Alpha alpha, long m, long n) {
  if (n < 1 || m < n) throw std::invalid_argument("sum_identity: need m >= n >= 1");
  if (n % 2 == 1)
    return fib_at(alpha, n) * (fib_at(alpha, m + 1) + fib_at(alpha, m - 1));
  return fib_at(alpha, m) * (fib_at(alpha, n - 1) + fib_at(alpha, n + 1));
}

mpz_class sigma_wing(Alpha alpha, long m) {
  alpha.require_at_least(3);
  if (m < 1) throw std::domain_error("sigma_wing: index must be >= 1");
  return m % 2 == 0 ? mpz_class(1) : mpz_class(alpha.value() + 1);
}

mpz_class sigma_shifted(Alpha alpha, long p, long m) {
  alpha.require_at_least(3);
  if (!is_small_prime(p)) throw std::invalid_argument("sigma_shifted: p must be prime");
  if (p == 2) {
    if (m == 1) return 1;
    if (m == 3) return fib_at(alpha, 3) + 1;
    throw std::domain_error("sigma_shifted: for p = 2 only m = 1 or 3 are in range");
  }
  if (m < 1 || m == p || m >= 2 * p)
    throw std::domain_error("sigma_shifted: need 1 <= m < 2p with m != p");
  mpz_class base = fib_at(alpha, p);
  return m % 2 == 0 ? mpz_class(base + 1) : mpz_class(base + alpha.value() + 1);
}

DoubleStepEquivalence double_step_equivalence(std::span<const long> alphas, long p, long q) {
  if (!is_small_prime(p) || !is_small_prime(q) || p == 2 || q == 2)
    throw std::invalid_argument("double_step_equivalence: p, q must be odd primes");
  if (alphas.empty()) throw std::invalid_argument("double_step_equivalence: empty alpha set");

  DoubleStepEquivalence out{p == 2 * q + 1 || p == 2 * q - 1, false, true};
  for (long a : alphas) {
    Alpha alpha(a);
    alpha.require_at_least(3);
    mpz_class first = sigma_of_fib(alpha, p);
    FibTable table(alpha, first);
    const bool equal = sigma(table, first) == sigma_of_fib(alpha, q);
    out.some_alpha = out.some_alpha || equal;
    out.all_alpha = out.all_alpha && equal;
  }
  return out;
}

Real refined_ord_cutoff(Alpha alpha, const Real& y) {
  const Real a(alpha.value());
  const Real phi = phi_alpha(alpha).value;
  const Real denom = y * log(phi) - 1;
  if (denom <= 0)
    throw std::domain_error("refined_ord_cutoff: requires y * log(phi_alpha) > 1");
  return exp(log(sqrt(a * a + 4) + 1 / phi) / denom);
}

long refined_ord_alpha_threshold(long alpha_max) {
  const Real quarter = Real(1) / 4;
  for (long a = 55; a <= alpha_max; ++a) {
    Alpha alpha(a);
    if (quarter * log_phi_alpha(alpha) <= 1) continue;
    if (Real(a) > refined_ord_cutoff(alpha, quarter)) return a;
  }
  throw precision_error("refined_ord_alpha_threshold: no crossover below alpha_max");
}

RunningMax c_alpha_estimate(Alpha alpha, long p_max) {
  alpha.require_at_least(3);
  if (p_max < 3) throw std::invalid_argument("c_alpha_estimate: p_max too small");
  FibTable table(alpha, fib_at(alpha, p_max));
  RunningMax best{0.0, 0};
  for (std::uint64_t p : primes_upto(static_cast<std::uint64_t>(p_max))) {
    const long pl = static_cast<long>(p);
    const double ratio =
        static_cast<double>(ord_trace_of_fib(table, pl).ord()) / std::log(static_cast<double>(pl));
    if (ratio > best.value) best = {ratio, pl};
  }
  return best;
}

RunningMax d_alpha_estimate(Alpha alpha, long n_max, long n_min) {
  alpha.require_at_least(3);
  if (n_min < 3) n_min = 3;  // loglog n must be positive
  if (n_max < n_min) throw std::invalid_argument("d_alpha_estimate: empty range");
  FibTable table(alpha, n_max);
  RunningMax best{0.0, 0};
  for (long n = n_min; n <= n_max; ++n) {
    const double denom = std::log(std::log(static_cast<double>(n)));
    if (denom <= 0) continue;
    const double ratio = static_cast<double>(ord_trace(table, n).ord()) / denom;
    if (ratio > best.value) best = {ratio, n};
  }
  return best;
}

}  // namespace fibsigma
