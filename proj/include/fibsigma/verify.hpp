#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibsigma/primality.hpp"

namespace fibsigma::verify {

struct Statement {
  std::string name;
  std::string detail;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Statement> statements;

  std::size_t violations() const noexcept {
    std::size_t v = 0;
    for (const auto& s : statements) v += s.violations;
    return v;
  }
  bool pass() const noexcept { return violations() == 0; }
};

// Scale knobs; zero / empty fields fall back to each suite's default, which
// matches the scales the statements are specified at.
struct Scales {
  std::vector<long> alphas;
  long pmax = 0;
  long kmax = 0;
  long mmax = 0;
  long nmax = 0;
  std::uint64_t limit = 0;
  unsigned threads = 1;
  PrimalityConfig primality{};
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const Scales& scales = {});

}  // namespace fibsigma::verify
