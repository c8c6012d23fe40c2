#pragma once

#include <stdexcept>
#include <string>

namespace fibsigma {

// Parameter of the recurrence F_0 = 0, F_1 = 1, F_{n+1} = alpha*F_n + F_{n-1}.
// Sequence generation accepts any alpha >= 1; the divisor-function and
// Zeckendorf layers require alpha >= 3 and enforce it via require_at_least(3).
class Alpha {
public:
  explicit Alpha(long value) : value_(value) {
    if (value < 1) throw std::invalid_argument("alpha must be >= 1");
  }

  long value() const noexcept { return value_; }

  void require_at_least(long minimum) const {
    if (value_ < minimum)
      throw std::domain_error("alpha must be >= " + std::to_string(minimum) +
                              " for this operation (got " + std::to_string(value_) + ")");
  }

  friend bool operator==(Alpha a, Alpha b) noexcept { return a.value_ == b.value_; }

private:
  long value_;
};

}  // namespace fibsigma
