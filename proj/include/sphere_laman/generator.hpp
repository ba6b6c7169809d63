#pragma once

#include <iosfwd>
#include <vector>

#include "sphere_laman/graph.hpp"

namespace sphere_laman {

// Vertex addition: new vertex n+1 joined to two distinct existing vertices.
Graph henneberg1(const Graph& g, int u, int v);

// Edge split: edge {u,v} removed, new vertex n+1 joined to u, v and a third
// vertex w not in {u,v}.
Graph henneberg2(const Graph& g, Edge e, int w);

struct LamanCorpus {
  int n = 0;
  std::vector<Graph> graphs;  // canonical forms, sorted by their graph6 string
};

// All Laman graphs on n vertices up to isomorphism: closure of the triangle
// under the two moves, deduplicated by canonical form. Both moves preserve the
// Laman property and every Laman graph arises this way.
LamanCorpus enumerate_laman(int n, int max_n = 10);

// Corpus file: header line "n=<n> count=<k>", then k graph6 lines.
void write_corpus(std::ostream& out, const LamanCorpus& corpus);
LamanCorpus read_corpus(std::istream& in);

}  // namespace sphere_laman
