#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <limits>
#include <stdexcept>

namespace fibsigma {

// Working real type for bounds, constants and convergence reporting: 40
// decimal digits (~133-bit mantissa). All exact arithmetic stays in integers;
// Real never carries a value that a test compares for exact equality.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;

inline Real real_epsilon() { return std::numeric_limits<Real>::epsilon(); }

inline Real to_real(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

// Euler-Mascheroni constant, more digits than Real keeps.
inline const Real& euler_gamma() {
  static const Real g("0.57721566490153286060651209008240243104215933593992");
  return g;
}

// Raised when a numeric routine cannot reach its documented accuracy.
class precision_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fibsigma
