#include "sphere_laman/count.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace sphere_laman {

// ---------------------------------------------------------------------------
// memo cache

struct MemoCache::Impl {
  static constexpr int kShards = 64;
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, mpz_class> map;
  };
  std::array<Shard, kShards> shards;

  Shard& shard_for(const std::string& key) {
    return shards[std::hash<std::string>{}(key) % kShards];
  }
  const Shard& shard_for(const std::string& key) const {
    return shards[std::hash<std::string>{}(key) % kShards];
  }
};

MemoCache::MemoCache() : impl_(std::make_unique<Impl>()) {}
MemoCache::~MemoCache() = default;

std::optional<mpz_class> MemoCache::lookup(const std::string& key) const {
  const auto& shard = impl_->shard_for(key);
  std::lock_guard lock(shard.mu);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return std::nullopt;
  return it->second;
}

void MemoCache::insert(const std::string& key, const mpz_class& value) {
  auto& shard = impl_->shard_for(key);
  std::lock_guard lock(shard.mu);
  shard.map.try_emplace(key, value);
}

std::size_t MemoCache::size() const {
  std::size_t total = 0;
  for (const auto& shard : impl_->shards) {
    std::lock_guard lock(shard.mu);
    total += shard.map.size();
  }
  return total;
}

void MemoCache::clear() {
  for (auto& shard : impl_->shards) {
    std::lock_guard lock(shard.mu);
    shard.map.clear();
  }
}

// ---------------------------------------------------------------------------
// recursion

namespace {

constexpr std::uint8_t kStar = 0xff;

inline std::uint64_t full_mask(int m) { return m == 64 ? ~0ull : (1ull << m) - 1; }

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t problem_fingerprint(int m, const std::vector<Quad>& quads) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(m);
  for (const Quad& q : quads)
    for (std::uint8_t x : q.lab) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

struct Ctx {
  const CountOptions* opts;
  MemoCache* cache;
  std::uint64_t hits = 0, misses = 0, nodes = 0, subsets = 0;
  // per-depth scratch for raw child quads (labels before compaction, kStar for
  // the fresh label)
  struct Scratch {
    std::vector<std::array<std::uint8_t, 4>> raw_i, raw_j;
    std::vector<Quad> child;
  };
  std::array<Scratch, 65> scratch;
};

int pick_pivot(const Ctx& ctx, int m, const std::vector<Quad>& quads) {
  switch (ctx.opts->pivot) {
    case PivotRule::First:
      return 0;
    case PivotRule::Seeded:
      return static_cast<int>(splitmix64(problem_fingerprint(m, quads) ^ ctx.opts->pivot_seed) %
                              quads.size());
    case PivotRule::Heuristic:
    default:
      return select_pivot_index(quads);
  }
}

mpz_class count_rec(Ctx& ctx, int m, std::vector<Quad> quads, int depth);

// Value contributed by the bipartition Ī = pair ∪ L, J̄ = complement. Returns 0
// for inadmissible splits.
mpz_class subset_value(Ctx& ctx, int m, const std::vector<Quad>& rest, std::uint64_t i_mask,
                       int depth) {
  ++ctx.subsets;
  const std::uint64_t j_mask = full_mask(m) & ~i_mask;
  const int sz_i = std::popcount(i_mask);
  const int sz_j = std::popcount(j_mask);
  const int need_i = sz_i - 2;
  const int need_j = sz_j - 2;

  auto& sc = ctx.scratch[depth];
  sc.raw_i.clear();
  sc.raw_j.clear();

  for (const Quad& q : rest) {
    const int c = std::popcount(q.mask() & i_mask);
    if (c == 2) return 0;
    if (c >= 3) {
      if (static_cast<int>(sc.raw_i.size()) == need_i) return 0;
      std::array<std::uint8_t, 4> raw = q.lab;
      if (c == 3)
        for (auto& x : raw)
          if (!((i_mask >> x) & 1)) x = kStar;
      sc.raw_i.push_back(raw);
    } else {
      if (static_cast<int>(sc.raw_j.size()) == need_j) return 0;
      std::array<std::uint8_t, 4> raw = q.lab;
      if (c == 1)
        for (auto& x : raw)
          if ((i_mask >> x) & 1) x = kStar;
      sc.raw_j.push_back(raw);
    }
  }

  // |Q40 ∪ Q31'| = |Ī ∪ {*}| - 3 and |Q04 ∪ Q13'| = |J̄ ∪ {*}| - 3; with no
  // Q22 the two checks are equivalent, so both must flip together.
  const bool ok_i = static_cast<int>(sc.raw_i.size()) == need_i;
  const bool ok_j = static_cast<int>(sc.raw_j.size()) == need_j;
  assert(ok_i == ok_j);
  if (!ok_i || !ok_j) return 0;

  auto child_count = [&](std::uint64_t side_mask, int side_sz,
                         const std::vector<std::array<std::uint8_t, 4>>& raw) -> mpz_class {
    // side problem: labels of side_mask compacted to 0..side_sz-1, star at
    // side_sz; |labels| = side_sz + 1, |quads| = side_sz - 2
    if (side_sz <= 3) return 1;  // 3 or 4 labels with |labels|-3 quads
    std::array<std::uint8_t, 64> comp{};
    int next = 0;
    for (int x = 0; x < m; ++x)
      if ((side_mask >> x) & 1) comp[x] = static_cast<std::uint8_t>(next++);
    auto& child = ctx.scratch[depth].child;
    child.clear();
    for (const auto& raw_q : raw) {
      int l[4];
      for (int i = 0; i < 4; ++i)
        l[i] = raw_q[i] == kStar ? side_sz : comp[raw_q[i]];
      child.push_back(Quad::of(l[0], l[1], l[2], l[3]));
    }
    std::sort(child.begin(), child.end());
    return count_rec(ctx, side_sz + 1, child, depth + 1);
  };

  mpz_class cnt_i = child_count(i_mask, sz_i, sc.raw_i);
  if (cnt_i == 0) return 0;
  mpz_class cnt_j = child_count(j_mask, sz_j, sc.raw_j);
  return cnt_i * cnt_j;
}

mpz_class count_rec(Ctx& ctx, int m, std::vector<Quad> quads, int depth) {
  ++ctx.nodes;
  assert(static_cast<int>(quads.size()) == m - 3);
  if (m <= 4) return 1;

  std::string key;
  const bool use_memo = ctx.opts->memo && m >= ctx.opts->memo_min_labels;
  if (use_memo) {
    key = detail::canonical_key_raw(m, quads);
    if (auto hit = ctx.cache->lookup(key)) {
      ++ctx.hits;
      return *hit;
    }
    ++ctx.misses;
  }

  const int pidx = pick_pivot(ctx, m, quads);
  const Quad pivot = quads[pidx];
  quads.erase(quads.begin() + pidx);

  std::uint64_t pair = ctx.opts->complement_pivot_pair
                           ? (1ull << pivot.lab[2]) | (1ull << pivot.lab[3])
                           : (1ull << pivot.lab[0]) | (1ull << pivot.lab[1]);
  const std::uint64_t free = full_mask(m) & ~pivot.mask();

  mpz_class total = 0;
  std::uint64_t L = 0;
  do {
    total += subset_value(ctx, m, quads, pair | L, depth);
    L = (L - free) & free;
  } while (L != 0);

  if (use_memo) ctx.cache->insert(key, total);
  return total;
}

// Root-level variant: splits the bipartition loop over worker threads. Each
// worker owns its Ctx; partial sums are added in worker order.
mpz_class count_root_parallel(const CountOptions& opts, MemoCache* cache, int m,
                              std::vector<Quad> quads, CountStats* stats, Ctx& main_ctx) {
  const int pidx = pick_pivot(main_ctx, m, quads);
  const Quad pivot = quads[pidx];
  quads.erase(quads.begin() + pidx);

  std::uint64_t pair = opts.complement_pivot_pair
                           ? (1ull << pivot.lab[2]) | (1ull << pivot.lab[3])
                           : (1ull << pivot.lab[0]) | (1ull << pivot.lab[1]);
  const std::uint64_t free = full_mask(m) & ~pivot.mask();

  std::vector<int> free_bits;
  for (int x = 0; x < m; ++x)
    if ((free >> x) & 1) free_bits.push_back(x);
  const std::uint64_t n_subsets = 1ull << free_bits.size();
  const int n_workers = std::min<std::uint64_t>(opts.threads, n_subsets);

  std::vector<mpz_class> partial(n_workers, mpz_class(0));
  std::vector<Ctx> ctxs(n_workers);
  std::vector<std::thread> workers;
  for (int w = 0; w < n_workers; ++w) {
    ctxs[w].opts = &opts;
    ctxs[w].cache = cache;
    workers.emplace_back([&, w] {
      const std::uint64_t lo = n_subsets * w / n_workers;
      const std::uint64_t hi = n_subsets * (w + 1) / n_workers;
      for (std::uint64_t t = lo; t < hi; ++t) {
        std::uint64_t L = 0;
        for (std::size_t i = 0; i < free_bits.size(); ++i)
          if ((t >> i) & 1) L |= 1ull << free_bits[i];
        partial[w] += subset_value(ctxs[w], m, quads, pair | L, 0);
      }
    });
  }
  mpz_class total = 0;
  for (int w = 0; w < n_workers; ++w) {
    workers[w].join();
    total += partial[w];
    if (stats) {
      stats->memo_hits += ctxs[w].hits;
      stats->memo_misses += ctxs[w].misses;
      stats->nodes += ctxs[w].nodes;
      stats->subsets += ctxs[w].subsets;
    }
  }
  return total;
}

}  // namespace

mpz_class count_realizations(const CountProblem& p, const CountOptions& opts, CountStats* stats) {
  if (!p.well_posed())
    throw std::invalid_argument("count_realizations: ill-posed problem, |Q| = " +
                                std::to_string(p.quads.size()) + " != |N| - 3 = " +
                                std::to_string(p.num_labels - 3));
  MemoCache local_cache;
  MemoCache* cache = opts.cache ? opts.cache : &local_cache;

  Ctx ctx;
  ctx.opts = &opts;
  ctx.cache = cache;

  mpz_class result;
  if (opts.threads > 1 && p.num_labels > 4) {
    ++ctx.nodes;
    std::string key;
    const bool use_memo = opts.memo && p.num_labels >= opts.memo_min_labels;
    std::optional<mpz_class> hit;
    if (use_memo) {
      key = detail::canonical_key_raw(p.num_labels, p.quads);
      hit = cache->lookup(key);
      if (hit) ++ctx.hits;
      else ++ctx.misses;
    }
    if (hit) {
      result = *hit;
    } else {
      result = count_root_parallel(opts, cache, p.num_labels, p.quads, stats, ctx);
      if (use_memo) cache->insert(key, result);
    }
  } else {
    result = count_rec(ctx, p.num_labels, p.quads, 0);
  }

  if (stats) {
    stats->memo_hits += ctx.hits;
    stats->memo_misses += ctx.misses;
    stats->nodes += ctx.nodes;
    stats->subsets += ctx.subsets;
    stats->memo_entries = opts.memo ? cache->size() : 0;
  }
  return result;
}

}  // namespace sphere_laman
