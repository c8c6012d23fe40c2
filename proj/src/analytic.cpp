#include "fibsigma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fibsigma/fib.hpp"
#include "fibsigma/parallel.hpp"
#include "fibsigma/sieve.hpp"
#include "fibsigma/sigma.hpp"

namespace fibsigma {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Brent's cycle variant of Pollard rho; n odd composite, no factor < 2^20.
std::uint64_t brent_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, d = 1, saved = 2;
    std::uint64_t power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        saved = x;
        power <<= 1;
        lam = 0;
      }
      x = mulmod_u64(x, x, n) + c;
      if (x >= n) x -= n;
      ++lam;
      const std::uint64_t diff = x > saved ? x - saved : saved - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = brent_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize_u64: n must be >= 1");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  for (std::uint64_t d = 17; d * d <= n && d < (1u << 20); d += 2) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::uint64_t mult_order(std::uint64_t p, std::uint64_t base) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw std::invalid_argument("mult_order: p must be an odd prime");
  base %= p;
  if (base == 0) throw std::invalid_argument("mult_order: p divides base");
  std::uint64_t e = p - 1;
  for (const auto& [q, mult] : factorize_u64(p - 1)) {
    for (int i = 0; i < mult; ++i) {
      if (powmod_u64(base, e / q, p) == 1)
        e /= q;
      else
        break;
    }
  }
  return e;
}

std::uint64_t w_of_p(std::uint64_t p, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("w_of_p: k must be >= 1");
  if (p == 2) return 1;
  return std::min<std::uint64_t>(k, mult_order(p, 2));
}

BkEstimate bk_truncated(std::uint64_t k, std::uint64_t cutoff, unsigned threads) {
  if (k < 1) throw std::invalid_argument("bk_truncated: k must be >= 1");
  if (cutoff < 3) throw std::invalid_argument("bk_truncated: cutoff must be >= 3");

  const std::vector<std::uint64_t> primes = primes_upto(cutoff);
  const std::uint64_t half = cutoff / 2;
  // ord(p; 2) > k is automatic for p > 2^k (2^ord - 1 >= p), so only small
  // primes need an order computation.
  const std::uint64_t order_needed_below = k >= 63 ? UINT64_MAX : (1ull << k);

  const std::size_t block = 16384;
  const std::size_t blocks = (primes.size() + block - 1) / block;
  std::vector<Real> low(blocks, Real(0)), high(blocks, Real(0));
  parallel_for_blocks(blocks, threads, [&](std::size_t bi) {
    Real sum_half(0), sum_rest(0);
    const std::size_t begin = bi * block;
    const std::size_t end = std::min(primes.size(), begin + block);
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t p = primes[i];
      if (p == 2) continue;
      const std::uint64_t w = p < order_needed_below ? w_of_p(p, k) : k;
      const Real rp(p);
      const Real term = log(1 - Real(w) / rp) - Real(k) * log(1 - 1 / rp);
      (p <= half ? sum_half : sum_rest) += term;
    }
    low[bi] = sum_half;
    high[bi] = sum_rest;
  });

  Real log_half_part(0), log_rest(0);
  for (std::size_t i = 0; i < blocks; ++i) {
    log_half_part += low[i];
    log_rest += high[i];
  }
  const Real lead = Real(static_cast<long>(k) - 1) * log(Real(2));
  BkEstimate est{k, cutoff, Real(0), Real(0), Real(0), Real(0)};
  est.log_value = lead + log_half_part + log_rest;
  est.value = exp(est.log_value);
  est.log_ratio = est.log_value / Real(k);
  est.convergence_delta = abs(est.value - exp(lead + log_half_part));
  return est;
}

namespace {

double chain_integrand(double x, std::uint64_t k) {
  const double lx = std::log(x);
  const double l2 = std::log(2.0);
  double denom = 1.0;
  for (std::uint64_t j = 0; j < k; ++j) denom *= lx + static_cast<double>(j) * l2;
  return 1.0 / denom;
}

struct SimpsonState {
  std::uint64_t k;
  double error = 0.0;
  int max_depth = 48;
};

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(SimpsonState& st, double a, double fa, double b, double fb, double fm,
                double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double fl = chain_integrand(0.5 * (a + m), st.k);
  const double fr = chain_integrand(0.5 * (m + b), st.k);
  const double left = simpson(a, fa, m, fm, fl);
  const double right = simpson(m, fm, b, fb, fr);
  const double diff = left + right - whole;
  if (depth >= st.max_depth || std::abs(diff) <= 15.0 * tol) {
    st.error += std::abs(diff) / 15.0;
    return left + right + diff / 15.0;
  }
  return adaptive(st, a, fa, m, fm, fl, left, 0.5 * tol, depth + 1) +
         adaptive(st, m, fm, b, fb, fr, right, 0.5 * tol, depth + 1);
}

}  // namespace

Quadrature density_integral(std::uint64_t k, double upper) {
  if (k < 1) throw std::invalid_argument("density_integral: k must be >= 1");
  if (upper <= 2.0) return {0.0, 0.0};
  const double a = 2.0, b = upper;
  const double fa = chain_integrand(a, k);
  const double fb = chain_integrand(b, k);
  const double fm = chain_integrand(0.5 * (a + b), k);
  const double coarse = simpson(a, fa, b, fb, fm);
  SimpsonState st{k};
  const double tol = 1e-9 * std::max(1.0, std::abs(coarse));
  const double value = adaptive(st, a, fa, b, fb, fm, coarse, tol, 0);
  if (!std::isfinite(value)) throw precision_error("density_integral: quadrature diverged");
  return {value, st.error};
}

DensityPrediction compare_density(std::uint64_t k, std::uint64_t limit, ChainKind kind,
                                  const PrimalityConfig& cfg, unsigned threads,
                                  std::uint64_t bk_cutoff) {
  if (k < 1) throw std::invalid_argument("compare_density: k must be >= 1");
  if (limit < 100) throw std::invalid_argument("compare_density: limit must be >= 100");

  const ScanSummary scan = scan_chains(limit, kind, no_records, cfg, threads);
  const BkEstimate bk = bk_truncated(k, bk_cutoff, threads);
  const Quadrature integral = density_integral(k, static_cast<double>(limit));

  DensityPrediction out{k,
                        limit,
                        kind,
                        static_cast<double>(bk.value),
                        integral.value,
                        static_cast<double>(bk.value) * integral.value,
                        scan.count_at_least(k),
                        scan.count_at_least(k, /*starts_only=*/true),
                        0.0};
  out.rel_error = out.observed == 0
                      ? std::numeric_limits<double>::infinity()
                      : std::abs(static_cast<double>(out.observed) - out.predicted) /
                            static_cast<double>(out.observed);
  return out;
}

Prop16Bracket prop16_bracket(std::uint64_t k, std::uint64_t cutoff, unsigned threads) {
  if (k < 2) throw std::invalid_argument("prop16_bracket: k must be >= 2");
  const double gamma = static_cast<double>(euler_gamma());
  const double logk = std::log(static_cast<double>(k));
  const double loglog2 = std::log(std::log(2.0));
  const BkEstimate bk = bk_truncated(k, cutoff, threads);
  return Prop16Bracket{k, cutoff, std::log(logk) + gamma - 2.0,
                       static_cast<double>(bk.log_ratio), logk + gamma + loglog2 - 1.0};
}

DirichletCheck dirichlet_check(Alpha alpha, double s, std::uint64_t terms) {
  alpha.require_at_least(3);
  if (s <= 2.0) throw std::invalid_argument("dirichlet_check: s must be > 2");
  if (terms < 1000) throw std::invalid_argument("dirichlet_check: terms must be >= 1000");

  const mpz_class bound(static_cast<unsigned long>(terms));
  FibTable table(alpha, bound);

  long double zeta_part = 0.0L;
  for (std::uint64_t m = terms; m >= 1; --m)
    zeta_part += powl(static_cast<long double>(m), static_cast<long double>(-s));

  long double fib_part = 0.0L;
  for (long j = table.top_index(); j >= 1; --j)
    fib_part += powl(static_cast<long double>(table.at(j).get_d()),
                     static_cast<long double>(-(s - 1.0)));

  long double rhs = 0.0L;
  for (std::uint64_t n = terms; n >= 1; --n) {
    const mpz_class sn = sigma(table, mpz_class(static_cast<unsigned long>(n)));
    rhs += static_cast<long double>(sn.get_d()) *
           powl(static_cast<long double>(n), static_cast<long double>(-s));
  }

  const long double lhs = zeta_part * fib_part;

  // Exact truncation gap: sum_j F_j^{1-s} * sum_{floor(T/F_j) < m <= T} m^-s,
  // dominated term by term by the integral bound floor(T/F_j)^{1-s}/(s-1).
  long double tail = 0.0L;
  for (long j = 1; j <= table.top_index(); ++j) {
    const long double fj = static_cast<long double>(table.at(j).get_d());
    const std::uint64_t floor_ratio = terms / static_cast<std::uint64_t>(table.at(j).get_ui());
    tail += powl(fj, static_cast<long double>(1.0 - s)) *
            powl(static_cast<long double>(floor_ratio), static_cast<long double>(1.0 - s)) /
            static_cast<long double>(s - 1.0);
  }

  DirichletCheck out{};
  out.lhs = static_cast<double>(lhs);
  out.rhs = static_cast<double>(rhs);
  out.gap = static_cast<double>(fabsl(lhs - rhs));
  out.tail_bound = static_cast<double>(tail);
  return out;
}

}  // namespace fibsigma
