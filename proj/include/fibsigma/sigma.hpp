#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "fibsigma/fib.hpp"

namespace fibsigma {

// All F_alpha members d with 1 <= d <= n and d | n, ascending.
struct DivisorSet {
  Alpha alpha;
  mpz_class n;
  std::vector<mpz_class> divisors;
};

DivisorSet divisor_set(Alpha alpha, const mpz_class& n);
DivisorSet divisor_set(const FibTable& table, const mpz_class& n);

// sigma(n) = sum of the F_alpha divisors of n; alpha >= 3, n >= 1.
mpz_class sigma(Alpha alpha, const mpz_class& n);
mpz_class sigma(const FibTable& table, const mpz_class& n);

// sigma(F_m) computed from the divisors of the index: sum_{d | m} F_d.
mpz_class sigma_of_fib(Alpha alpha, long m);

// k-fold application of sigma; k = 0 is the identity.
mpz_class sigma_iterate(Alpha alpha, const mpz_class& n, unsigned long k);

// The full orbit n, sigma(n), sigma^2(n), ..., 1. ord() = number of steps.
struct SigmaTrace {
  Alpha alpha;
  std::vector<mpz_class> iterates;

  const mpz_class& start() const { return iterates.front(); }
  std::size_t ord() const noexcept { return iterates.size() - 1; }
};

SigmaTrace ord_trace(Alpha alpha, const mpz_class& n);
SigmaTrace ord_trace(const FibTable& table, const mpz_class& n);

// Same orbit for n = F_m, with the first step taken through the index
// divisors instead of a value scan. The table must cover F_m.
SigmaTrace ord_trace_of_fib(Alpha alpha, long m);
SigmaTrace ord_trace_of_fib(const FibTable& table, long m);

std::size_t ord(Alpha alpha, const mpz_class& n);

// ord(F_n) for every n in [2, n_max], sharing one table across rows; result
// is indexed by n (slots 0 and 1 unused). Deterministic for any thread count.
std::vector<std::size_t> ord_of_fib_range(Alpha alpha, long n_max, unsigned threads = 1);

// F_{m+n} + F_{m-n} through its factored form:
//   n odd:  F_n (F_{m+1} + F_{m-1}),  n even:  F_m (F_{n-1} + F_{n+1}).
// Requires m >= n >= 1.
mpz_class sum_identity(Alpha alpha, long m, long n);

// sigma(F_{m+1} + F_{m-1}) in closed form: 1 (m even) or alpha+1 (m odd).
mpz_class sigma_wing(Alpha alpha, long m);

// sigma(F_{m+p} + F_{m-p}) in closed form for prime p, m != p, 1 <= m < 2p:
//   p = 2:  1 (m = 1) or F_3 + 1 (m = 3)
//   p odd:  F_p + 1 (m even) or F_p + alpha + 1 (m odd)
mpz_class sigma_shifted(Alpha alpha, long p, long m);

// The three faces of the neighbor-prime criterion for odd primes p, q:
//   index_relation:  p = 2q+1 or p = 2q-1
//   some_alpha:      sigma^2(F_p) = sigma(F_q) for at least one tested alpha
//   all_alpha:       the same equality for every tested alpha
struct DoubleStepEquivalence {
  bool index_relation;
  bool some_alpha;
  bool all_alpha;
  bool consistent() const noexcept {
    return index_relation == some_alpha && some_alpha == all_alpha;
  }
};

DoubleStepEquivalence double_step_equivalence(std::span<const long> alphas, long p, long q);

// A_alpha(y) = exp( log(sqrt(alpha^2+4) + 1/phi) / (y log phi - 1) ): the
// cutoff above which ord(n) < log2(log n) * y^{-1}-style refinements apply.
// Requires y log phi_alpha > 1.
Real refined_ord_cutoff(Alpha alpha, const Real& y);

// Least alpha >= 55 with alpha > A_alpha(1/4); diagnostic recomputation.
long refined_ord_alpha_threshold(long alpha_max = 4000);

// Empirical running maxima standing in for the (uncomputable) limsups
//   C_alpha = limsup ord(F_p)/log p,  D_alpha = limsup ord(n)/loglog n.
struct RunningMax {
  double value;
  long argument;  // where the maximum is attained
};
RunningMax c_alpha_estimate(Alpha alpha, long p_max);
RunningMax d_alpha_estimate(Alpha alpha, long n_max, long n_min = 3);

}  // namespace fibsigma
