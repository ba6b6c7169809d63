#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "sphere_laman/quads.hpp"

namespace sphere_laman {

// Thread-safe sharded map from canonical problem keys to counts. Can be shared
// across calls (and across graphs in a sweep); inserts are idempotent.
class MemoCache {
public:
  MemoCache();
  ~MemoCache();
  MemoCache(const MemoCache&) = delete;
  MemoCache& operator=(const MemoCache&) = delete;

  std::optional<mpz_class> lookup(const std::string& key) const;
  void insert(const std::string& key, const mpz_class& value);
  std::size_t size() const;
  void clear();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

enum class PivotRule {
  Heuristic,  // most-entangled quad (see select_pivot_index)
  First,      // first quad in sorted order
  Seeded,     // pseudorandom, a pure function of (problem, pivot_seed)
};

struct CountOptions {
  bool memo = true;
  int memo_min_labels = 6;  // problems with fewer labels are recomputed
  int threads = 1;          // parallel bipartition chunks at the root node
  PivotRule pivot = PivotRule::Heuristic;
  std::uint64_t pivot_seed = 0;
  // Builds Ī around the pivot's second label pair instead of its first; the
  // count is invariant under this swap.
  bool complement_pivot_pair = false;
  MemoCache* cache = nullptr;  // optional shared cache; a private one otherwise
};

struct CountStats {
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
  std::uint64_t memo_entries = 0;  // cache size after the call
  std::uint64_t nodes = 0;         // recursion nodes entered
  std::uint64_t subsets = 0;       // bipartitions examined
};

// Degree of the product of the quad divisor classes on the moduli space of
// num_labels marked points; for to_count_problem(g) with g Laman this is the
// number of realizations of g on the sphere up to rotations, for fixed general
// edge lengths. Requires a well-posed problem (|Q| = |N| - 3); the result is 0
// when some subconfiguration is over-braced.
mpz_class count_realizations(const CountProblem& p, const CountOptions& opts = {},
                             CountStats* stats = nullptr);

}  // namespace sphere_laman
