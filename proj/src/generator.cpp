#include "sphere_laman/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sphere_laman {

Graph henneberg1(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("henneberg1: endpoints must differ");
  if (u < 1 || u > g.n() || v < 1 || v > g.n())
    throw std::invalid_argument("henneberg1: vertex out of range");
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, g.n() + 1);
  edges.emplace_back(v, g.n() + 1);
  return Graph(g.n() + 1, std::move(edges));
}

Graph henneberg2(const Graph& g, Edge e, int w) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("henneberg2: edge not in graph");
  if (w == e.u || w == e.v)
    throw std::invalid_argument("henneberg2: third vertex must avoid the split edge");
  if (w < 1 || w > g.n()) throw std::invalid_argument("henneberg2: vertex out of range");
  std::vector<Edge> edges;
  edges.reserve(g.m() + 2);
  for (const Edge& f : g.edges())
    if (f != e) edges.push_back(f);
  edges.emplace_back(e.u, g.n() + 1);
  edges.emplace_back(e.v, g.n() + 1);
  edges.emplace_back(w, g.n() + 1);
  return Graph(g.n() + 1, std::move(edges));
}

LamanCorpus enumerate_laman(int n, int max_n) {
  if (n < 3) throw std::invalid_argument("enumerate_laman: need n >= 3");
  if (max_n > 12) max_n = 12;
  if (n > max_n)
    throw std::invalid_argument("enumerate_laman: n = " + std::to_string(n) +
                                " exceeds the bound " + std::to_string(max_n));

  const Graph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
  std::set<std::string> level{to_graph6(canonical_form(triangle))};

  for (int k = 3; k < n; ++k) {
    std::set<std::string> next;
    for (const std::string& s : level) {
      Graph g = from_graph6(s);
      for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v)
          next.insert(to_graph6(canonical_form(henneberg1(g, u, v))));
      for (const Edge& e : g.edges())
        for (int w = 1; w <= k; ++w)
          if (w != e.u && w != e.v)
            next.insert(to_graph6(canonical_form(henneberg2(g, e, w))));
    }
    level = std::move(next);
  }

  LamanCorpus corpus;
  corpus.n = n;
  corpus.graphs.reserve(level.size());
  for (const std::string& s : level) corpus.graphs.push_back(from_graph6(s));
  return corpus;
}

void write_corpus(std::ostream& out, const LamanCorpus& corpus) {
  out << "n=" << corpus.n << " count=" << corpus.graphs.size() << '\n';
  for (const Graph& g : corpus.graphs) out << to_graph6(g) << '\n';
}

LamanCorpus read_corpus(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(1, "corpus: missing header");
  int n = 0;
  long count = -1;
  if (std::sscanf(header.c_str(), "n=%d count=%ld", &n, &count) != 2)
    throw ParseError(1, "corpus: malformed header '" + header + "'");
  LamanCorpus corpus;
  corpus.n = n;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Graph g = from_graph6(line, line_no);
    if (g.n() != n) throw ParseError(line_no, "corpus: vertex count mismatch");
    corpus.graphs.push_back(std::move(g));
  }
  if (static_cast<long>(corpus.graphs.size()) != count)
    throw ParseError(line_no, "corpus: header count " + std::to_string(count) +
                                  " != " + std::to_string(corpus.graphs.size()) + " graphs");
  return corpus;
}

}  // namespace sphere_laman
