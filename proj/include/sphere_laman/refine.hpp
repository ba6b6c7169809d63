#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace sphere_laman::detail {

// Canonical labeling by partition refinement with individualization on ties.
//
// sig(v, color) must be invariant under relabeling: it may depend only on the
// colored structure around v, never on raw vertex ids. serialize(lab), with
// lab[v] the canonical label of v, must determine the structure up to
// isomorphism. The minimum serialization over all search leaves is canonical:
// the leaf set is a relabeling invariant and serialize is injective on
// isomorphism classes.

// Recolors by (color, sig) rank; returns the new cell count. Splits only,
// never merges, so cell counts are monotone across passes.
template <class SigFn>
int refine_pass(int n, std::vector<int>& color, const SigFn& sig) {
  std::vector<std::pair<std::vector<int>, int>> keyed(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> key = sig(v, color);
    key.insert(key.begin(), color[v]);
    keyed[v] = {std::move(key), v};
  }
  std::sort(keyed.begin(), keyed.end());
  int c = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) ++c;
    color[keyed[i].second] = c;
  }
  return c + 1;
}

template <class SigFn>
int equitable_refine(int n, std::vector<int>& color, const SigFn& sig) {
  int cells = refine_pass(n, color, sig);
  while (cells < n) {
    int next = refine_pass(n, color, sig);
    if (next == cells) break;
    cells = next;
  }
  return cells;
}

template <class SigFn, class SerFn>
void canon_search(int n, std::vector<int> color, const SigFn& sig, const SerFn& ser,
                  std::string& best, std::vector<int>* best_lab, bool& have) {
  int cells = equitable_refine(n, color, sig);
  if (cells == n) {
    std::string cand = ser(color);
    if (!have || cand < best) {
      best = std::move(cand);
      if (best_lab) *best_lab = color;
      have = true;
    }
    return;
  }
  std::vector<int> cnt(cells, 0);
  for (int v = 0; v < n; ++v) ++cnt[color[v]];
  int target = 0;
  while (cnt[target] < 2) ++target;
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> split(n);
    for (int w = 0; w < n; ++w)
      split[w] = 2 * color[w] + (color[w] == target && w != v ? 1 : 0);
    canon_search(n, std::move(split), sig, ser, best, best_lab, have);
  }
}

template <class SigFn, class SerFn>
std::string canonical_search(int n, std::vector<int> color, const SigFn& sig, const SerFn& ser,
                             std::vector<int>* best_lab = nullptr) {
  if (n == 0) return ser(std::vector<int>{});
  std::string best;
  bool have = false;
  canon_search(n, std::move(color), sig, ser, best, best_lab, have);
  return best;
}

}  // namespace sphere_laman::detail
