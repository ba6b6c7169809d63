#include "sphere_laman/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace sphere_laman {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n)
      throw std::invalid_argument("graph: edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} out of range 1.." + std::to_string(n));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("graph: duplicate edge {" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + "}");
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

int Graph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

namespace {

bool blank_or_comment(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses exactly `want` integers from the line; rejects trailing junk.
std::vector<long> parse_ints(const std::string& s, int want, int line_no) {
  std::istringstream iss(s);
  std::vector<long> out;
  long x;
  while (iss >> x) out.push_back(x);
  if (!iss.eof()) {
    std::string junk;
    iss.clear();
    iss >> junk;
    throw ParseError(line_no, "unexpected token '" + junk + "'");
  }
  if (static_cast<int>(out.size()) != want)
    throw ParseError(line_no, "expected " + std::to_string(want) + " integers, got " +
                                  std::to_string(out.size()));
  return out;
}

std::vector<Graph> parse_edge_list_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (true) {
    // header line
    int header_line;
    do {
      if (!std::getline(in, line)) return graphs;
      ++line_no;
    } while (blank_or_comment(line));
    header_line = line_no;
    auto hdr = parse_ints(line, 2, header_line);
    long n = hdr[0], m = hdr[1];
    if (n < 1 || n > 1000000) throw ParseError(header_line, "vertex count out of range");
    if (m < 0) throw ParseError(header_line, "negative edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long k = 0; k < m; ++k) {
      do {
        if (!std::getline(in, line))
          throw ParseError(line_no, "unexpected end of input: " + std::to_string(m - k) +
                                        " edge line(s) missing");
        ++line_no;
      } while (blank_or_comment(line));
      auto ab = parse_ints(line, 2, line_no);
      long a = ab[0], b = ab[1];
      if (a < 1 || a > n || b < 1 || b > n)
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
      if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
      Edge e(static_cast<int>(a), static_cast<int>(b));
      if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw ParseError(line_no, "duplicate edge {" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + "}");
      edges.push_back(e);
    }
    graphs.emplace_back(static_cast<int>(n), std::move(edges));
  }
}

}  // namespace

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph from_graph6(const std::string& line, int line_no) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw ParseError(line_no, "graph6: truncated string");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw ParseError(line_no, "graph6: byte out of range");
    return c - 63;
  };
  long n;
  int c0 = next();
  if (c0 < 63) {
    n = c0;
  } else {
    // '~' prefix: 18-bit size; '~~' prefix (36-bit) rejected as out of scope
    int c1 = next();
    if (c1 == 63) throw ParseError(line_no, "graph6: vertex count too large");
    n = (static_cast<long>(c1) << 12) | (next() << 6) | next();
  }
  if (n < 1) throw ParseError(line_no, "graph6: empty graph");
  if (n > 100000) throw ParseError(line_no, "graph6: vertex count too large");
  std::vector<Edge> edges;
  int bits = 0, buf = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      if (bits == 0) {
        buf = next();
        bits = 6;
      }
      --bits;
      if ((buf >> bits) & 1) edges.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  while (pos < line.size()) {
    if (!std::isspace(static_cast<unsigned char>(line[pos])))
      throw ParseError(line_no, "graph6: trailing characters");
    ++pos;
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  std::string out;
  long n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph6: vertex count too large");
  }
  int bits = 0, buf = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      buf = (buf << 1) | (g.has_edge(static_cast<int>(i + 1), static_cast<int>(j + 1)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + buf));
        bits = 0;
        buf = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (buf << (6 - bits))));
  return out;
}

std::vector<Graph> parse_graphs(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list_stream(in);
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    graphs.push_back(from_graph6(line, line_no));
  }
  return graphs;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream iss(text);
  auto graphs = parse_graphs(iss, format);
  if (graphs.empty()) throw ParseError(1, "no graph in input");
  if (graphs.size() > 1) throw ParseError(1, "expected a single graph, got " +
                                                 std::to_string(graphs.size()));
  return graphs.front();
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n() + 1)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(g.n() + 1, false);
  for (int v = 1; v <= g.n(); ++v) {
    if (perm[v] < 1 || perm[v] > g.n() || seen[perm[v]])
      throw std::invalid_argument("relabel: not a permutation of 1..n");
    seen[perm[v]] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.n(), std::move(edges));
}

}  // namespace sphere_laman
