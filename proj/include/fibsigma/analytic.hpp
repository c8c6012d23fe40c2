#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fibsigma/alpha.hpp"
#include "fibsigma/chains.hpp"
#include "fibsigma/real.hpp"

namespace fibsigma {

// Prime factorization (prime, exponent), ascending; trial division plus
// Brent's rho for large cofactors.
std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n);

// Least e >= 1 with base^e = 1 mod p; p an odd prime not dividing base.
std::uint64_t mult_order(std::uint64_t p, std::uint64_t base);

// w(p) of the chain polynomial system: 1 for p = 2, else min{k, ord(p; 2)}.
std::uint64_t w_of_p(std::uint64_t p, std::uint64_t k);

// Truncated singular series B_k(x) = 2^{k-1} prod_{2<p<=x} (1 - w(p)/p)/(1 - 1/p)^k,
// accumulated as a sum of logarithms in extended precision with a fixed block
// reduction order (bit-identical for any thread count). convergence_delta is
// |B_k(x) - B_k(x/2)|.
struct BkEstimate {
  std::uint64_t k;
  std::uint64_t cutoff;
  Real value;
  Real log_value;
  Real log_ratio;  // log(B_k(x)) / k
  Real convergence_delta;
};
BkEstimate bk_truncated(std::uint64_t k, std::uint64_t cutoff, unsigned threads = 1);

// integral_2^upper dx / ((log x)(log 2x) ... (log 2^{k-1} x)) by adaptive
// Simpson quadrature at relative tolerance 1e-9.
struct Quadrature {
  double value;
  double abs_error;
};
Quadrature density_integral(std::uint64_t k, double upper);

// Observed count of p <= limit with l(p) >= k against B_k * integral.
struct DensityPrediction {
  std::uint64_t k;
  std::uint64_t limit;
  ChainKind kind;
  double bk;
  double integral;
  double predicted;
  std::size_t observed;        // every seed
  std::size_t observed_starts; // chain starts only
  double rel_error;            // |observed - predicted| / observed
};
DensityPrediction compare_density(std::uint64_t k, std::uint64_t limit, ChainKind kind,
                                  const PrimalityConfig& cfg = {}, unsigned threads = 1,
                                  std::uint64_t bk_cutoff = 1000000);

// log(B_k(x))/k against the asymptotic bracket
//   [loglog k + gamma - 2, log k + gamma + loglog 2 - 1];
// diagnostic only, the bracket carries unquantified lower-order terms.
struct Prop16Bracket {
  std::uint64_t k;
  std::uint64_t cutoff;
  double lower;
  double log_ratio;
  double upper;

  bool within(double slack) const noexcept {
    return log_ratio >= lower - slack && log_ratio <= upper + slack;
  }
};
Prop16Bracket prop16_bracket(std::uint64_t k, std::uint64_t cutoff, unsigned threads = 1);

// Truncated check of zeta(s) * zeta_alpha(s-1) = sum sigma(n)/n^s:
//   lhs = (sum_{m<=T} m^-s)(sum_{F_j<=T} F_j^{-(s-1)}), rhs = sum_{n<=T} sigma(n)/n^s.
// tail_bound dominates the exact truncation gap, so gap <= tail_bound must hold.
struct DirichletCheck {
  double lhs;
  double rhs;
  double gap;
  double tail_bound;
};
DirichletCheck dirichlet_check(Alpha alpha, double s, std::uint64_t terms);

}  // namespace fibsigma
