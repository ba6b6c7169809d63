#include "sphere_laman/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <random>
#include <stdexcept>
#include <vector>

#include "sphere_laman/ratpoly.hpp"

namespace sphere_laman {

DistanceAssignment random_assignment(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DistanceAssignment a;
  for (const Edge& e : g.edges()) {
    mpq_class v;
    do {
      long p = static_cast<long>(rng() % 121) - 60;
      long q = static_cast<long>(rng() % 40) + 1;
      v = mpq_class(p, q);
      v.canonicalize();
    } while (v == 0 || v == 1);
    a.values[e] = v;
  }
  return a;
}

namespace {

struct GaugedSystem {
  int num_vars = 0;
  std::vector<RatPoly> eqs;
};

// Gauge: lifts of vertex 1 pinned to (0:1) and (1:0), left lift of vertex 2 to
// (1:1). Unknowns are the affine coordinates of the remaining lifts: var 0 is
// the right lift of vertex 2; vertex k >= 3 owns vars 2(k-3)+1 (left) and
// 2(k-3)+2 (right). Vertices are relabeled first so that 1 has maximum degree
// and 2 is a neighbour of 1 of maximum degree; for n <= 4 every equation then
// becomes univariate after constant-coefficient linear substitutions.
GaugedSystem build_system(const Graph& g, const DistanceAssignment& lambda) {
  const int n = g.n();

  // relabeling: old -> new
  std::vector<int> order;  // new -> old
  {
    std::vector<int> deg(n + 1);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);
    int v1 = 1;
    for (int v = 2; v <= n; ++v)
      if (deg[v] > deg[v1]) v1 = v;
    int v2 = 0;
    for (const Edge& e : g.edges()) {
      int other = e.u == v1 ? e.v : (e.v == v1 ? e.u : 0);
      if (other && (v2 == 0 || deg[other] > deg[v2])) v2 = other;
    }
    if (v2 == 0) throw std::invalid_argument("oracle: graph has an isolated vertex");
    order = {0, v1, v2};
    for (int v = 1; v <= n; ++v)
      if (v != v1 && v != v2) order.push_back(v);
  }
  std::vector<int> newlab(n + 1);
  for (int k = 1; k <= n; ++k) newlab[order[k]] = k;

  using P = std::pair<RatPoly, RatPoly>;  // projective (s : t)
  auto point = [&](int v, bool left) -> P {
    if (v == 1) return left ? P{RatPoly::constant(0), RatPoly::constant(1)}
                            : P{RatPoly::constant(1), RatPoly::constant(0)};
    if (v == 2 && left) return {RatPoly::constant(1), RatPoly::constant(1)};
    int var = v == 2 ? 0 : 2 * (v - 3) + 1 + (left ? 0 : 1);
    return {RatPoly::variable(var), RatPoly::constant(1)};
  };
  auto bracket = [](const P& a, const P& b) { return a.first * b.second - b.first * a.second; };

  GaugedSystem sys;
  sys.num_vars = 2 * n - 3;
  for (const Edge& e : g.edges()) {
    int a = newlab[e.u], b = newlab[e.v];
    if (a > b) std::swap(a, b);
    // d(P,Q) = cross_ratio(P_left, Q_right, Q_left, P_right)
    P p1 = point(a, true), p2 = point(b, false), p3 = point(b, true), p4 = point(a, false);
    RatPoly lhs = bracket(p3, p1) * bracket(p4, p2);
    RatPoly rhs = RatPoly::constant(lambda.values.at(e)) * bracket(p3, p2) * bracket(p4, p1);
    sys.eqs.push_back(lhs - rhs);
  }
  return sys;
}

}  // namespace

OracleResult oracle_count(const Graph& g, const DistanceAssignment& lambda) {
  const int n = g.n();
  if (n < 2 || n > 4) throw std::invalid_argument("oracle_count: supported for 2 <= n <= 4");
  if (g.m() != 2 * n - 3)
    throw std::invalid_argument("oracle_count: edge count != 2n-3");
  for (const Edge& e : g.edges())
    if (!lambda.values.count(e))
      throw std::invalid_argument("oracle_count: missing distance for an edge");

  GaugedSystem sys = build_system(g, lambda);
  auto degenerate = [](const std::string& why) {
    OracleResult r;
    r.redraw_reason = why;
    return r;
  };

  std::vector<RatPoly> eqs = sys.eqs;
  std::vector<bool> var_done(sys.num_vars, false);

  // constant-coefficient linear substitutions until exhausted
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (eqs[i].is_constant()) {
        if (eqs[i].is_zero()) return degenerate("dependent equation");
        return degenerate("inconsistent equation");
      }
      for (int v = 0; v < sys.num_vars; ++v) {
        if (var_done[v] || eqs[i].degree(v) != 1) continue;
        RatPoly c1 = eqs[i].coeff(v, 1);
        if (!c1.is_constant()) continue;
        RatPoly value = RatPoly::constant(mpq_class(-1) / c1.constant_value()) * eqs[i].coeff(v, 0);
        eqs.erase(eqs.begin() + i);
        for (RatPoly& f : eqs) f = f.substitute(v, value);
        var_done[v] = true;
        progress = true;
        break;
      }
      if (progress) break;
    }
  }

  // remaining equations must be univariate; the gauge makes this so for n <= 4
  std::vector<std::vector<RatPoly>> per_var(sys.num_vars);
  for (const RatPoly& f : eqs) {
    std::uint32_t mask = f.vars_mask();
    if (std::popcount(mask) != 1)
      throw std::logic_error("oracle_count: system did not triangularize");
    per_var[std::countr_zero(mask)].push_back(f);
  }

  mpz_class total = 1;
  for (int v = 0; v < sys.num_vars; ++v) {
    if (per_var[v].empty()) {
      if (!var_done[v]) return degenerate("underdetermined variable");
      continue;
    }
    RatPoly h = per_var[v][0];
    for (std::size_t k = 1; k < per_var[v].size(); ++k) h = uni_gcd(h, per_var[v][k], v);
    const int d = h.degree(v);
    if (d == 0) return degenerate("no common root for a variable");
    if (uni_gcd(h, uni_derivative(h, v), v).degree(v) > 0) return degenerate("repeated root");
    // roots at 0 or 1 collide with the gauged lifts of vertices 1 and 2
    if (h.eval_univariate(v, 0) == 0 || h.eval_univariate(v, 1) == 0)
      return degenerate("solution hits a gauge point");
    total *= d;
  }

  OracleResult r;
  r.count = total;
  return r;
}

mpz_class oracle_count_stable(const Graph& g, std::uint64_t seed, int draws, int max_attempts) {
  std::optional<mpz_class> agreed;
  int successes = 0;
  for (int k = 0; k < max_attempts && successes < draws; ++k) {
    OracleResult r = oracle_count(g, random_assignment(g, seed + static_cast<std::uint64_t>(k)));
    if (!r.ok()) continue;
    if (agreed && *agreed != *r.count)
      throw std::runtime_error("oracle: draws disagree (" + agreed->get_str() + " vs " +
                               r.count->get_str() + ")");
    agreed = r.count;
    ++successes;
  }
  if (successes < draws) throw std::runtime_error("oracle: too many degenerate draws");
  return *agreed;
}

}  // namespace sphere_laman
