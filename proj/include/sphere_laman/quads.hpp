#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sphere_laman/graph.hpp"

namespace sphere_laman {

// One braced constraint: an unordered pair of disjoint unordered label pairs
// {{a,b},{c,d}}. Normal form: a<b, c<d, a<c. Labels are 0-based.
struct Quad {
  std::array<std::uint8_t, 4> lab{};  // pairs (lab[0],lab[1]) and (lab[2],lab[3])

  static Quad of(int a, int b, int c, int d);
  std::uint64_t mask() const {
    return (1ull << lab[0]) | (1ull << lab[1]) | (1ull << lab[2]) | (1ull << lab[3]);
  }
  auto operator<=>(const Quad&) const = default;
};

// A label set {0..num_labels-1} with a multiset of quads over it. The counting
// recursion is defined for quads.size() == num_labels - 3 ("well posed").
struct CountProblem {
  int num_labels = 0;
  std::vector<Quad> quads;  // kept sorted; duplicates allowed and meaningful

  static CountProblem make(int num_labels, std::vector<Quad> quads);
  bool well_posed() const { return static_cast<int>(quads.size()) == num_labels - 3; }
};

// Labels {0..2n-1}: vertex v (1-based) contributes labels v-1 and v-1+n, and
// edge {a,b} the quad {{a-1,b-1},{a-1+n,b-1+n}}. Requires |E| = 2n-3.
CountProblem to_count_problem(const Graph& g);

// Canonical byte string: equal iff the problems are related by a label
// bijection (quad multisets mapped onto each other). Unused labels only
// contribute their count.
std::string canonical_key(const CountProblem& p);

// Classification of quads against a label subset I by |quad ∩ I|.
struct SplitClasses {
  std::vector<Quad> q40, q31, q22, q13, q04;
};
SplitClasses split_classes(const std::vector<Quad>& quads, std::uint64_t i_mask);

// Replaces, in each quad, the single label outside `inside_mask` by
// `star_label`. Every quad must have exactly 3 labels inside.
std::vector<Quad> star_substitute(const std::vector<Quad>& quads, std::uint64_t inside_mask,
                                  int star_label);

// Pivot choice: maximizes the number of other quads sharing >= 3 labels,
// breaking ties by shares of >= 2, then >= 1, then smallest index.
int select_pivot_index(const std::vector<Quad>& quads);

namespace detail {
std::string canonical_key_raw(int num_labels, const std::vector<Quad>& quads);
}

}  // namespace sphere_laman
