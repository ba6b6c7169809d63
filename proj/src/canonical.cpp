#include "sphere_laman/graph.hpp"
#include "sphere_laman/refine.hpp"

#include <algorithm>

namespace sphere_laman {

namespace {

std::string serialize_edges(const Graph& g, const std::vector<int>& lab) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) {
    int a = lab[e.u - 1], b = lab[e.v - 1];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  std::string s;
  s.reserve(3 + 2 * edges.size());
  s.push_back(static_cast<char>(g.n()));
  s.push_back(static_cast<char>(g.m() >> 8));
  s.push_back(static_cast<char>(g.m() & 255));
  for (auto [a, b] : edges) {
    s.push_back(static_cast<char>(a));
    s.push_back(static_cast<char>(b));
  }
  return s;
}

std::string canonical_impl(const Graph& g, std::vector<int>* best_lab) {
  if (g.n() > 64) throw std::invalid_argument("canonical_graph: more than 64 vertices");
  auto adj = g.adjacency();
  auto sig = [&](int v, const std::vector<int>& color) {
    std::vector<int> key;
    key.reserve(adj[v + 1].size());
    for (int w : adj[v + 1]) key.push_back(color[w - 1]);
    std::sort(key.begin(), key.end());
    return key;
  };
  auto ser = [&](const std::vector<int>& lab) { return serialize_edges(g, lab); };
  return detail::canonical_search(g.n(), std::vector<int>(g.n(), 0), sig, ser, best_lab);
}

}  // namespace

std::string canonical_graph(const Graph& g) { return canonical_impl(g, nullptr); }

Graph canonical_form(const Graph& g) {
  std::vector<int> lab;
  canonical_impl(g, &lab);
  std::vector<int> perm(g.n() + 1, 0);
  for (int v = 1; v <= g.n(); ++v) perm[v] = lab[v - 1] + 1;
  return relabel(g, perm);
}

}  // namespace sphere_laman
