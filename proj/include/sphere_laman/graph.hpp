#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphere_laman {

// Undirected edge on 1-based vertices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 1..n. Edge list sorted, no loops, no
// duplicates; these invariants are enforced at construction.
class Graph {
public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  // degree of vertex v (1-based)
  int degree(int v) const;
  std::vector<std::vector<int>> adjacency() const;  // index 0 unused

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

enum class GraphFormat { EdgeList, Graph6 };

// Edge-list text: "n m" header, then m lines "a b" with 1 <= a < b <= n.
// Several graphs may be concatenated in one stream. Graph6: one graph per
// line, standard encoding. Blank lines and lines starting with '#' are skipped.
std::vector<Graph> parse_graphs(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line, int line_no = 1);

// perm[old] = new, both 1-based (perm[0] ignored); perm must be a bijection on 1..n.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Generic rigidity on the sphere: |E| = 2n-3 and every subgraph on n' >= 2
// vertices spans at most 2n'-3 edges. Decided by a (2,3)-pebble game.
bool is_laman(const Graph& g);

// Canonical form under vertex relabeling: canonical_graph(g) == canonical_graph(h)
// iff g and h are isomorphic. canonical_form returns the relabeled graph itself.
std::string canonical_graph(const Graph& g);
Graph canonical_form(const Graph& g);

}  // namespace sphere_laman
