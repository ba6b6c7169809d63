#include "sphere_laman/quads.hpp"
#include "sphere_laman/refine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace sphere_laman {

Quad Quad::of(int a, int b, int c, int d) {
  if (a == b || c == d || a == c || a == d || b == c || b == d)
    throw std::invalid_argument("quad: labels must be distinct");
  if (a < 0 || b < 0 || c < 0 || d < 0 || a > 63 || b > 63 || c > 63 || d > 63)
    throw std::invalid_argument("quad: label out of range 0..63");
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a > c) {
    std::swap(a, c);
    std::swap(b, d);
  }
  Quad q;
  q.lab = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
           static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
  return q;
}

CountProblem CountProblem::make(int num_labels, std::vector<Quad> quads) {
  if (num_labels < 0 || num_labels > 64)
    throw std::invalid_argument("count problem: label count out of range 0..64");
  for (const Quad& q : quads)
    for (int x : q.lab)
      if (x >= num_labels) throw std::invalid_argument("count problem: quad label out of range");
  std::sort(quads.begin(), quads.end());
  CountProblem p;
  p.num_labels = num_labels;
  p.quads = std::move(quads);
  return p;
}

CountProblem to_count_problem(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("to_count_problem: need at least 2 vertices");
  if (2 * n > 64) throw std::invalid_argument("to_count_problem: more than 32 vertices");
  if (g.m() != 2 * n - 3)
    throw std::invalid_argument("to_count_problem: edge count " + std::to_string(g.m()) +
                                " != 2n-3 = " + std::to_string(2 * n - 3));
  std::vector<Quad> quads;
  quads.reserve(g.m());
  for (const Edge& e : g.edges())
    quads.push_back(Quad::of(e.u - 1, e.v - 1, e.u - 1 + n, e.v - 1 + n));
  return CountProblem::make(2 * n, std::move(quads));
}

SplitClasses split_classes(const std::vector<Quad>& quads, std::uint64_t i_mask) {
  SplitClasses out;
  for (const Quad& q : quads) {
    switch (std::popcount(q.mask() & i_mask)) {
      case 4: out.q40.push_back(q); break;
      case 3: out.q31.push_back(q); break;
      case 2: out.q22.push_back(q); break;
      case 1: out.q13.push_back(q); break;
      default: out.q04.push_back(q); break;
    }
  }
  return out;
}

std::vector<Quad> star_substitute(const std::vector<Quad>& quads, std::uint64_t inside_mask,
                                  int star_label) {
  std::vector<Quad> out;
  out.reserve(quads.size());
  for (const Quad& q : quads) {
    assert(std::popcount(q.mask() & inside_mask) == 3);
    int l[4];
    for (int i = 0; i < 4; ++i)
      l[i] = (inside_mask >> q.lab[i]) & 1 ? q.lab[i] : star_label;
    out.push_back(Quad::of(l[0], l[1], l[2], l[3]));
  }
  return out;
}

int select_pivot_index(const std::vector<Quad>& quads) {
  if (quads.empty()) throw std::invalid_argument("select_pivot: empty quad list");
  const int nq = static_cast<int>(quads.size());
  int best = 0;
  std::array<int, 3> best_score{-1, -1, -1};  // shares >=3, >=2, >=1
  for (int i = 0; i < nq; ++i) {
    std::array<int, 3> score{0, 0, 0};
    for (int j = 0; j < nq; ++j) {
      if (j == i) continue;
      int c = std::popcount(quads[i].mask() & quads[j].mask());
      if (c >= 3) ++score[0];
      if (c >= 2) ++score[1];
      if (c >= 1) ++score[2];
    }
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

namespace {

// Canonicalization runs on labels that occur in some quad; unused labels are
// interchangeable and enter the key only as a count.
std::string quad_key(int num_labels, const std::vector<Quad>& quads) {
  std::array<int, 64> to_used;
  to_used.fill(-1);
  std::uint64_t used_mask = 0;
  for (const Quad& q : quads) used_mask |= q.mask();
  int used = 0;
  for (int x = 0; x < num_labels; ++x)
    if ((used_mask >> x) & 1) to_used[x] = used++;

  // quads over compacted used labels
  struct Q4 {
    std::array<int, 4> l;
  };
  std::vector<Q4> qs;
  qs.reserve(quads.size());
  for (const Quad& q : quads)
    qs.push_back({{to_used[q.lab[0]], to_used[q.lab[1]], to_used[q.lab[2]], to_used[q.lab[3]]}});

  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> inc(used);
  for (const Q4& q : qs) {
    inc[q.l[0]].push_back({q.l[1], {q.l[2], q.l[3]}});
    inc[q.l[1]].push_back({q.l[0], {q.l[2], q.l[3]}});
    inc[q.l[2]].push_back({q.l[3], {q.l[0], q.l[1]}});
    inc[q.l[3]].push_back({q.l[2], {q.l[0], q.l[1]}});
  }

  auto sig = [&](int v, const std::vector<int>& color) {
    // multiset over incident quads: (pair-partner color, sorted other-pair colors)
    std::vector<std::array<int, 3>> trip;
    trip.reserve(inc[v].size());
    for (const auto& [partner, other] : inc[v]) {
      int a = color[other.first], b = color[other.second];
      trip.push_back({color[partner], std::min(a, b), std::max(a, b)});
    }
    std::sort(trip.begin(), trip.end());
    std::vector<int> key;
    key.reserve(3 * trip.size());
    for (const auto& t : trip) key.insert(key.end(), t.begin(), t.end());
    return key;
  };

  auto ser = [&](const std::vector<int>& lab) {
    std::vector<Quad> rel;
    rel.reserve(qs.size());
    for (const Q4& q : qs) rel.push_back(Quad::of(lab[q.l[0]], lab[q.l[1]], lab[q.l[2]], lab[q.l[3]]));
    std::sort(rel.begin(), rel.end());
    std::string s;
    s.reserve(3 + 4 * rel.size());
    s.push_back(static_cast<char>(num_labels));
    s.push_back(static_cast<char>(used));
    s.push_back(static_cast<char>(rel.size()));
    for (const Quad& q : rel)
      for (std::uint8_t x : q.lab) s.push_back(static_cast<char>(x));
    return s;
  };

  return detail::canonical_search(used, std::vector<int>(used, 0), sig, ser);
}

}  // namespace

std::string canonical_key(const CountProblem& p) { return quad_key(p.num_labels, p.quads); }

namespace detail {
std::string canonical_key_raw(int num_labels, const std::vector<Quad>& quads) {
  return quad_key(num_labels, quads);
}
}  // namespace detail

}  // namespace sphere_laman
