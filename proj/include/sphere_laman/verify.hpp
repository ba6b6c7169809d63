#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sphere_laman/quads.hpp"

namespace sphere_laman {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  long cases = 0;
  std::string detail;  // empty on pass; deterministic for a fixed seed
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

struct VerifyHooks {
  // recursion entry point under test; the CLI fault-injection hook swaps in a
  // corrupted one to prove the suite can fail
  std::function<mpz_class(const CountProblem&)> count;
};

// Cross-validation of the recursion against the independent elimination
// oracle, plus numeric identities tying the spherical distance to lift
// cross-ratios. Deterministic for a fixed seed.
VerifyReport run_verification(std::uint64_t seed, const VerifyHooks& hooks = {});

}  // namespace sphere_laman
