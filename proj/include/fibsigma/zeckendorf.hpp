#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "fibsigma/fib.hpp"

namespace fibsigma {

// Sparse digit of a Zeckendorf representation: coeff * F_index.
struct ZeckDigit {
  long index;  // c_i >= 1
  long coeff;  // 0 < a_i <= alpha
  friend bool operator==(const ZeckDigit&, const ZeckDigit&) = default;
};

// n = sum coeff_i * F_{index_i}, digits ascending by index, subject to:
//   (i)   0 < a_i <= alpha, and a_1 < alpha when c_1 = 1
//   (ii)  c_1 < c_2 < ... (indices >= 1, strictly increasing)
//   (iii) c_{i+1} = c_i + 1 implies a_{i+1} < alpha
struct ZeckRep {
  Alpha alpha;
  std::vector<ZeckDigit> digits;
};

enum class ZeckViolation { none, coeff_range, index_order, adjacent_run };

struct ZeckCheck {
  bool ok;
  ZeckViolation violation;
  std::size_t position;  // offending digit, meaningful when !ok
};

const char* to_string(ZeckViolation v) noexcept;

ZeckCheck zeck_validate(const ZeckRep& rep) noexcept;

// Greedy encoding from the largest index down; alpha >= 3, n >= 1.
ZeckRep zeck_encode(Alpha alpha, const mpz_class& n);
ZeckRep zeck_encode(const FibTable& table, const mpz_class& n);  // table.bound() >= n

// Sum of the digits; throws std::invalid_argument naming the first violated
// condition when the representation is not valid.
mpz_class zeck_decode(const ZeckRep& rep);

// Number of valid representations of n using indices <= max_index, by
// exhaustive enumeration; independent of the greedy encoder. Uniqueness means
// this is 1 for every n >= 1.
std::size_t zeck_count_representations(const FibTable& table, const mpz_class& n, long max_index);

}  // namespace fibsigma
