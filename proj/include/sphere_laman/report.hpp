#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "sphere_laman/count.hpp"

namespace sphere_laman {

// One JSON line per processed graph. Timing and memo statistics are attached
// only on request so that default output is byte-deterministic.
struct RunReport {
  std::string id;
  int n = 0;
  int m = 0;
  bool laman = false;
  std::optional<mpz_class> count;  // absent: skipped (non-Laman) or failed
  std::string error;               // set when counting was refused
  bool with_stats = false;
  double elapsed_ms = 0.0;
  CountStats stats;
};

std::string to_json_line(const RunReport& r);

}  // namespace sphere_laman
