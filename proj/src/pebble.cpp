#include "sphere_laman/graph.hpp"

#include <algorithm>

namespace sphere_laman {

// (2,3)-pebble game. Every vertex holds 2 pebbles; inserting an edge requires
// 4 pebbles on its endpoints and consumes one, orienting the edge away from
// the paying vertex. Pebbles are fetched over directed paths (reversing them).
// All 2n-3 edges insert iff the graph is (2,3)-tight.
bool is_laman(const Graph& g) {
  const int n = g.n();
  if (n < 2) return false;
  if (g.m() != 2 * n - 3) return false;

  std::vector<std::vector<int>> out(n + 1);
  std::vector<int> pebbles(n + 1, 2);
  std::vector<int> parent(n + 1);
  std::vector<int> stack;

  // Moves one pebble to root via a directed path avoiding `avoid`, if any.
  auto collect = [&](int root, int avoid) -> bool {
    std::fill(parent.begin(), parent.end(), 0);
    parent[root] = root;
    parent[avoid] = avoid;
    stack.assign(1, root);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : out[x]) {
        if (parent[y] != 0) continue;
        parent[y] = x;
        if (pebbles[y] > 0) {
          --pebbles[y];
          ++pebbles[root];
          for (int cur = y; cur != root;) {
            int p = parent[cur];
            auto& op = out[p];
            op.erase(std::find(op.begin(), op.end(), cur));
            out[cur].push_back(p);
            cur = p;
          }
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  };

  for (const Edge& e : g.edges()) {
    while (pebbles[e.u] + pebbles[e.v] < 4) {
      if (!collect(e.u, e.v) && !collect(e.v, e.u)) return false;
    }
    int u = e.u, v = e.v;
    if (pebbles[u] == 0) std::swap(u, v);
    --pebbles[u];
    out[u].push_back(v);
  }
  return true;
}

}  // namespace sphere_laman
