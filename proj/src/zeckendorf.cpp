#include "fibsigma/zeckendorf.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace fibsigma {

const char* to_string(ZeckViolation v) noexcept {
  switch (v) {
    case ZeckViolation::none: return "none";
    case ZeckViolation::coeff_range: return "coefficient out of range";
    case ZeckViolation::index_order: return "indices not strictly increasing from 1";
    case ZeckViolation::adjacent_run: return "adjacent index carries coefficient alpha";
  }
  return "?";
}

ZeckCheck zeck_validate(const ZeckRep& rep) noexcept {
  const long a = rep.alpha.value();
  for (std::size_t i = 0; i < rep.digits.size(); ++i) {
    const ZeckDigit& d = rep.digits[i];
    if (d.coeff <= 0 || d.coeff > a) return {false, ZeckViolation::coeff_range, i};
    if (i == 0) {
      if (d.index < 1) return {false, ZeckViolation::index_order, i};
      // The leading-digit cap only bites at index 1; otherwise values such as
      // 9 = 3*F_2 (alpha = 3) would have no representation at all.
      if (d.index == 1 && d.coeff >= a) return {false, ZeckViolation::coeff_range, i};
    } else {
      const ZeckDigit& prev = rep.digits[i - 1];
      if (d.index <= prev.index) return {false, ZeckViolation::index_order, i};
      if (d.index == prev.index + 1 && d.coeff >= a)
        return {false, ZeckViolation::adjacent_run, i};
    }
  }
  return {true, ZeckViolation::none, 0};
}

namespace {

// Bounded fallback: first valid representation found by descending search.
// The greedy encoder is expected to always validate; this keeps the contract
// honest if it ever does not.
bool search_rep(const FibTable& table, long index, const mpz_class& remaining,
                std::vector<ZeckDigit>& acc, const ZeckRep& proto, ZeckRep& out) {
  if (remaining == 0) {
    ZeckRep candidate{proto.alpha, acc};
    std::reverse(candidate.digits.begin(), candidate.digits.end());
    if (zeck_validate(candidate).ok) {
      out = std::move(candidate);
      return true;
    }
    return false;
  }
  if (index < 1) return false;
  const long a = proto.alpha.value();
  for (long coeff = std::min<long>(a, mpz_class(remaining / table.at(index)).get_si());
       coeff >= 0; --coeff) {
    mpz_class rest = remaining - coeff * table.at(index);
    if (rest < 0) continue;
    if (coeff > 0) acc.push_back({index, coeff});
    if (search_rep(table, index - 1, rest, acc, proto, out)) return true;
    if (coeff > 0) acc.pop_back();
  }
  return false;
}

}  // namespace

ZeckRep zeck_encode(const FibTable& table, const mpz_class& n) {
  table.alpha().require_at_least(3);
  if (n < 1) throw std::invalid_argument("zeck_encode: n must be >= 1");
  if (n > table.bound()) throw std::out_of_range("zeck_encode: table smaller than n");

  ZeckRep rep{table.alpha(), {}};
  mpz_class remaining = n;
  while (remaining > 0) {
    const long k = table.ind(remaining);
    mpz_class q = remaining / table.at(k);
    rep.digits.push_back({k, q.get_si()});
    remaining -= q * table.at(k);
  }
  std::reverse(rep.digits.begin(), rep.digits.end());

  if (!zeck_validate(rep).ok) {
    ZeckRep found{table.alpha(), {}};
    std::vector<ZeckDigit> acc;
    if (!search_rep(table, table.ind(n), n, acc, rep, found))
      throw precision_error("zeck_encode: no valid representation found");
    return found;
  }
  return rep;
}

ZeckRep zeck_encode(Alpha alpha, const mpz_class& n) {
  alpha.require_at_least(3);
  if (n < 1) throw std::invalid_argument("zeck_encode: n must be >= 1");
  FibTable table(alpha, n);
  return zeck_encode(table, n);
}

namespace {

// Descending enumeration; prev_full marks a coefficient alpha at index i+1,
// which forces index i to stay unused (condition (iii) read downwards).
std::size_t count_reps(const FibTable& table, const std::vector<mpz_class>& max_sum, long index,
                       const mpz_class& remaining, bool prev_full) {
  if (remaining == 0) return 1;
  if (index < 1 || remaining > max_sum[static_cast<std::size_t>(index)]) return 0;
  const long a = table.alpha().value();
  std::size_t total = count_reps(table, max_sum, index - 1, remaining, false);
  if (!prev_full) {
    const long cap = std::min<long>(a, mpz_class(remaining / table.at(index)).get_si());
    for (long coeff = 1; coeff <= cap; ++coeff) {
      if (index == 1 && coeff >= a) break;
      total += count_reps(table, max_sum, index - 1, remaining - coeff * table.at(index),
                          coeff == a);
    }
  }
  return total;
}

}  // namespace

std::size_t zeck_count_representations(const FibTable& table, const mpz_class& n, long max_index) {
  table.alpha().require_at_least(3);
  if (n < 1) throw std::invalid_argument("zeck_count_representations: n must be >= 1");
  max_index = std::min(max_index, table.size());
  std::vector<mpz_class> max_sum(static_cast<std::size_t>(max_index) + 1);
  max_sum[0] = 0;
  for (long i = 1; i <= max_index; ++i)
    max_sum[static_cast<std::size_t>(i)] =
        max_sum[static_cast<std::size_t>(i - 1)] + table.alpha().value() * table.at(i);
  return count_reps(table, max_sum, max_index, n, false);
}

mpz_class zeck_decode(const ZeckRep& rep) {
  rep.alpha.require_at_least(3);
  const ZeckCheck check = zeck_validate(rep);
  if (!check.ok)
    throw std::invalid_argument(std::string("zeck_decode: invalid representation: ") +
                                to_string(check.violation) + " at digit " +
                                std::to_string(check.position));
  mpz_class sum = 0;
  for (const ZeckDigit& d : rep.digits) sum += d.coeff * fib_at(rep.alpha, d.index);
  return sum;
}

}  // namespace fibsigma
