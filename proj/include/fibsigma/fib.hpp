#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "fibsigma/alpha.hpp"
#include "fibsigma/real.hpp"

namespace fibsigma {

// Exact F_n for any signed index, O(log |n|) big-integer multiplications.
// Negative indices follow F_{-n} = (-1)^{n+1} F_n.
mpz_class fib_at(Alpha alpha, long n);

// Sum_{i=1}^{n} F_i, computed exactly as ((alpha+1)F_n + F_{n-1} - 1)/alpha.
mpz_class fib_partial_sum(Alpha alpha, long n);

// Consecutive values F_1, F_2, ... ending at the first value that exceeds the
// bound, so every n <= bound (and every sigma iterate of such n) has both its
// index and all its candidate divisors inside the table. Immutable after
// construction and safe to share across threads.
class FibTable {
public:
  FibTable(Alpha alpha, mpz_class bound);

  Alpha alpha() const noexcept { return alpha_; }
  const mpz_class& bound() const noexcept { return bound_; }

  // Largest index whose value is <= bound. The table holds one more entry.
  long top_index() const noexcept { return static_cast<long>(values_.size()) - 1; }
  long size() const noexcept { return static_cast<long>(values_.size()); }

  // 1-based; valid for 1 <= index <= top_index() + 1.
  const mpz_class& at(long index) const;

  // F_1 .. F_{top_index()+1}, ascending.
  std::span<const mpz_class> values() const noexcept { return values_; }

  // The k with F_k <= n < F_{k+1}; requires alpha >= 3, 1 <= n < back().
  long ind(const mpz_class& n) const;

private:
  Alpha alpha_;
  mpz_class bound_;
  std::vector<mpz_class> values_;
};

// Table-free ind; iterates the recurrence. alpha >= 3, n >= 1.
long ind(Alpha alpha, const mpz_class& n);

// log n / log phi_alpha + 2, nudged upward; contract: ind(n) < returned value.
Real ind_upper_bound(Alpha alpha, const mpz_class& n);

// Dominant root (alpha + sqrt(alpha^2+4))/2 with an absolute error bound.
struct PhiAlpha {
  Real value;
  Real abs_error;
};
PhiAlpha phi_alpha(Alpha alpha);
Real log_phi_alpha(Alpha alpha);

}  // namespace fibsigma
