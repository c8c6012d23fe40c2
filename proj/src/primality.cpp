#include "fibsigma/primality.hpp"

#include <array>
#include <stdexcept>

namespace fibsigma {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// One strong-probable-prime round; n odd, n - 1 = d * 2^s.
bool strong_round_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) noexcept {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every n < 3.3 * 10^24, in
  // particular for all 64-bit inputs.
  for (std::uint64_t a : kWitnesses)
    if (!strong_round_u64(n, a, d, s)) return false;
  return true;
}

mpz_class PrimalityConfig::max_deterministic() {
  mpz_class t = 1;
  t <<= 64;
  return t - 1;
}

void PrimalityConfig::validate() const {
  if (mode == Mode::probabilistic && rounds < 40)
    throw std::invalid_argument("PrimalityConfig: probabilistic mode needs rounds >= 40");
  if (threshold < 2) throw std::invalid_argument("PrimalityConfig: threshold must be >= 2");
}

namespace {

// x/2 mod n for odd n.
void halve_mod(mpz_class& x, const mpz_class& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  x >>= 1;
}

bool miller_rabin_rounds(const mpz_class& n, unsigned rounds, std::uint64_t seed) {
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed ^ mpz_get_ui(n.get_mpz_t())));

  mpz_class base, x;
  const mpz_class span = n - 4;  // bases drawn from [2, n-2]
  for (unsigned round = 0; round < rounds; ++round) {
    base = rng.get_z_range(span) + 2;
    x = 0;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

bool strong_lucas_probable_prime(const mpz_class& n) {
  // Selfridge parameter search: first D in 5, -7, 9, -11, ... with (D|n) = -1.
  long d_abs = 5;
  int sign = 1;
  mpz_class D;
  for (;;) {
    D = sign > 0 ? mpz_class(d_abs) : mpz_class(-d_abs);
    const int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    // Jacobi 0 exposes a shared factor; n survives only by being |D| itself.
    if (j == 0) return n == d_abs && is_prime_u64(static_cast<std::uint64_t>(d_abs));
    d_abs += 2;
    sign = -sign;
    if (d_abs > 1000000) throw std::logic_error("strong_lucas: no suitable D (square input?)");
  }
  // P = 1, Q = (1 - D)/4; strong test on n + 1 = d * 2^s.
  mpz_class Q = (1 - D) / 4;
  mpz_class d = n + 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  // Left-to-right ladder on (U_k, V_k, Q^k).
  mpz_class U = 1, V = 1, qk = Q % n;
  if (qk < 0) qk += n;
  mpz_class t;
  const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    // k -> 2k
    U = U * V % n;
    V = (V * V - 2 * qk) % n;
    qk = qk * qk % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      // k -> k+1 with P = 1: U' = (U + V)/2, V' = (D*U + V)/2
      t = U + V;
      halve_mod(t, n);
      V = D * U + V;
      halve_mod(V, n);
      V %= n;
      U = t % n;
      qk = qk * Q % n;
    }
  }
  U %= n;
  if (U < 0) U += n;
  V %= n;
  if (V < 0) V += n;
  qk %= n;
  if (qk < 0) qk += n;

  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = (V * V - 2 * qk) % n;
    if (V < 0) V += n;
    if (V == 0) return true;
    qk = qk * qk % n;
  }
  return false;
}

bool is_prime(const mpz_class& n, const PrimalityConfig& cfg) {
  cfg.validate();
  if (n < 2) return false;
  if (n < 41) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  if (mpz_even_p(n.get_mpz_t())) return false;

  if (n <= cfg.threshold && mpz_fits_ulong_p(n.get_mpz_t()))
    return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  if (cfg.mode == PrimalityConfig::Mode::deterministic_small)
    throw std::domain_error("is_prime: input exceeds the deterministic threshold");

  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (!miller_rabin_rounds(n, cfg.rounds, cfg.witness_seed)) return false;
  return strong_lucas_probable_prime(n);
}

}  // namespace fibsigma
