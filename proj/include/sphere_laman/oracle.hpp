#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sphere_laman/graph.hpp"

namespace sphere_laman {

// Exact edge data: a rational value per edge for the spherical distance
// function. Random rational draws are generic enough for counting.
struct DistanceAssignment {
  std::map<Edge, mpq_class> values;
};

// Random rationals p/q, p in [-60,60] \ {0}, q in [1,40], avoiding the
// degenerate values 0 and 1.
DistanceAssignment random_assignment(const Graph& g, std::uint64_t seed);

struct OracleResult {
  std::optional<mpz_class> count;
  std::string redraw_reason;  // set when count is empty: degenerate draw
  bool ok() const { return count.has_value(); }
};

// Counts gauge-fixed solutions of the lift equation system by exact
// elimination, independently of the recursion. Supported for n <= 4 (the
// substitution chain stays triangular there). A degenerate draw (inconsistent
// or dependent equations, repeated roots, solutions hitting gauge points)
// yields an empty count with a reason: draw again.
OracleResult oracle_count(const Graph& g, const DistanceAssignment& lambda);

// Draws assignments derived from `seed` until `draws` succeed; all successful
// counts must agree, else throws.
mpz_class oracle_count_stable(const Graph& g, std::uint64_t seed, int draws = 5,
                              int max_attempts = 40);

}  // namespace sphere_laman
