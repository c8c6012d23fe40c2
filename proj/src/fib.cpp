#include "fibsigma/fib.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fibsigma {

namespace {

// Doubling step identities, both consequences of F_{m+n} = F_{m+1}F_n + F_m F_{n-1}:
//   F_{2m}   = F_m (2 F_{m+1} - alpha F_m)
//   F_{2m+1} = F_m^2 + F_{m+1}^2
mpz_class fib_nonneg(long alpha, unsigned long n) {
  if (n == 0) return 0;
  const mpz_class a(alpha);
  mpz_class f = 0, g = 1;  // (F_m, F_{m+1}), m = 0
  mpz_class even, odd;
  const int top = 63 - std::countl_zero(n);
  for (int bit = top; bit >= 0; --bit) {
    even = 2 * g - a * f;
    even *= f;           // F_{2m}
    odd = f * f + g * g; // F_{2m+1}
    if ((n >> bit) & 1) {
      f = odd;
      g = a * odd + even;
    } else {
      f = std::move(even);
      g = std::move(odd);
    }
  }
  return f;
}

}  // namespace

mpz_class fib_at(Alpha alpha, long n) {
  if (n >= 0) return fib_nonneg(alpha.value(), static_cast<unsigned long>(n));
  const unsigned long m = static_cast<unsigned long>(-(n + 1)) + 1;  // |n| without overflow
  mpz_class v = fib_nonneg(alpha.value(), m);
  if (m % 2 == 0) v = -v;  // F_{-m} = (-1)^{m+1} F_m
  return v;
}

mpz_class fib_partial_sum(Alpha alpha, long n) {
  if (n < 1) throw std::invalid_argument("fib_partial_sum: n must be >= 1");
  const mpz_class a(alpha.value());
  mpz_class num = (a + 1) * fib_at(alpha, n) + fib_at(alpha, n - 1) - 1;
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
  return out;
}

FibTable::FibTable(Alpha alpha, mpz_class bound) : alpha_(alpha), bound_(std::move(bound)) {
  if (bound_ < 1) throw std::invalid_argument("FibTable: bound must be >= 1");
  const mpz_class a(alpha_.value());
  mpz_class prev = 0, cur = 1;
  for (;;) {
    values_.push_back(cur);
    if (cur > bound_) break;
    mpz_class next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
}

const mpz_class& FibTable::at(long index) const {
  if (index < 1 || index > size())
    throw std::out_of_range("FibTable::at: index outside table");
  return values_[static_cast<std::size_t>(index - 1)];
}

long FibTable::ind(const mpz_class& n) const {
  alpha_.require_at_least(3);
  if (n < 1) throw std::domain_error("ind: n must be >= 1");
  if (n >= values_.back()) throw std::out_of_range("FibTable::ind: n beyond table range");
  auto it = std::upper_bound(values_.begin(), values_.end(), n);
  return static_cast<long>(it - values_.begin());
}

long ind(Alpha alpha, const mpz_class& n) {
  alpha.require_at_least(3);
  if (n < 1) throw std::domain_error("ind: n must be >= 1");
  const mpz_class a(alpha.value());
  mpz_class prev = 1, cur = a;  // F_1, F_2
  long k = 1;
  while (cur <= n) {
    mpz_class next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
    ++k;
  }
  return k;
}

Real ind_upper_bound(Alpha alpha, const mpz_class& n) {
  alpha.require_at_least(3);
  if (n < 1) throw std::domain_error("ind_upper_bound: n must be >= 1");
  Real b = log(to_real(n)) / log_phi_alpha(alpha) + 2;
  // Round up: a few ulps of slack keeps the strict inequality contract.
  b += 8 * real_epsilon() * abs(b);
  return b;
}

PhiAlpha phi_alpha(Alpha alpha) {
  const Real a(alpha.value());
  Real v = (a + sqrt(a * a + 4)) / 2;
  // Correctly rounded sqrt/add/div: at most a few ulps end to end.
  return PhiAlpha{v, 4 * real_epsilon() * v};
}

Real log_phi_alpha(Alpha alpha) { return log(phi_alpha(alpha).value); }

}  // namespace fibsigma
