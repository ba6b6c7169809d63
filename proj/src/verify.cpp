#include "sphere_laman/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "sphere_laman/count.hpp"
#include "sphere_laman/oracle.hpp"
#include "sphere_laman/sphere.hpp"

namespace sphere_laman {

bool VerifyReport::all_pass() const {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

constexpr double kTol = 1e-9;

// Möbius image under an invertible 2x2 matrix.
ProjPoint moebius(const ProjPoint& p, const std::array<Cx, 4>& m) {
  return {m[0] * p.s + m[1] * p.t, m[2] * p.s + m[3] * p.t};
}

VerifyCheck check_distance_identities(std::uint64_t seed, long cases) {
  VerifyCheck out{"distance-cross-ratio-identity"};
  std::mt19937_64 rng(seed);
  double worst = 0;
  long done = 0;
  while (done < cases) {
    SpherePoint p = random_sphere_point(rng);
    SpherePoint q = random_sphere_point(rng);
    Cx d = spherical_distance(p, q);
    // keep clear of the degenerate loci d = 0 (shared lift) and unbounded d
    if (std::abs(d) < 0.05 || std::abs(d - 1.0) < 0.05 || std::abs(d) > 20.0) continue;
    try {
      Lifts lp = lifts(p), lq = lifts(q);
      Cx cr = cross_ratio(lp.left, lp.right, lq.left, lq.right);
      double err1 = std::abs(cr / (cr - 1.0) - d);
      double err2 = std::abs(cross_ratio(lp.left, lq.right, lq.left, lp.right) - d);
      worst = std::max({worst, err1, err2});
    } catch (const std::domain_error&) {
      continue;  // a cross-family coincidence; not constrained by the identity
    }
    ++done;
  }
  out.cases = done;
  out.pass = worst <= kTol;
  if (!out.pass) {
    std::ostringstream os;
    os << "worst error " << worst << " (seed " << seed << ")";
    out.detail = os.str();
  }
  return out;
}

VerifyCheck check_normalization(std::uint64_t seed, long cases) {
  VerifyCheck out{"cross-ratio-normalization"};
  std::mt19937_64 rng(seed + 1);
  double worst = 0;
  for (long k = 0; k < cases; ++k) {
    Cx l = 4.0 * random_complex(rng);
    Cx cr = cross_ratio({1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {l, 1.0});
    worst = std::max(worst, std::abs(cr - l));
  }
  out.cases = cases;
  out.pass = worst <= kTol;
  if (!out.pass) out.detail = "worst error " + std::to_string(worst);
  return out;
}

VerifyCheck check_moebius_invariance(std::uint64_t seed, long cases) {
  VerifyCheck out{"cross-ratio-moebius-invariance"};
  std::mt19937_64 rng(seed + 2);
  double worst = 0;
  long done = 0;
  while (done < cases) {
    std::array<ProjPoint, 4> pts;
    for (auto& p : pts) p = {random_complex(rng), random_complex(rng)};
    std::array<Cx, 4> m;
    for (auto& c : m) c = random_complex(rng);
    if (std::abs(m[0] * m[3] - m[1] * m[2]) < 0.05) continue;
    Cx cr0, cr1;
    try {
      cr0 = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
      cr1 = cross_ratio(moebius(pts[0], m), moebius(pts[1], m), moebius(pts[2], m),
                        moebius(pts[3], m));
    } catch (const std::domain_error&) {
      continue;  // nearly coincident draw
    }
    if (std::abs(cr0) > 50.0) continue;  // conditioning guard, not a correctness one
    ++done;
    worst = std::max(worst, std::abs(cr0 - cr1));
  }
  out.cases = done;
  out.pass = worst <= 1e-6;  // two chained divisions; looser than the identity checks
  if (!out.pass) out.detail = "worst error " + std::to_string(worst);
  return out;
}

VerifyCheck check_lift_geometry(std::uint64_t seed, long cases) {
  VerifyCheck out{"lift-isotropic-directions"};
  std::mt19937_64 rng(seed + 3);
  double worst = 0;
  for (long k = 0; k < cases; ++k) {
    SpherePoint p = random_sphere_point(rng);
    Lifts l = lifts(p);
    for (const ProjPoint& pt : {l.left, l.right}) {
      auto d = conic_point(pt);
      Cx dd = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
      Cx pd = p.x * d[0] + p.y * d[1] + p.z * d[2];
      worst = std::max({worst, std::abs(dd), std::abs(pd)});
    }
  }
  out.cases = cases;
  out.pass = worst <= kTol;
  if (!out.pass) out.detail = "worst residual " + std::to_string(worst);
  return out;
}

VerifyCheck check_degenerate_locus(std::uint64_t seed, long cases) {
  VerifyCheck out{"degenerate-pair-locus"};
  std::mt19937_64 rng(seed + 4);
  bool ok = true;
  for (long k = 0; k < cases && ok; ++k) {
    SpherePoint p = random_sphere_point(rng);
    // walk along the left ruling line: <P,Q> stays 1 and lifts stay shared
    auto d = conic_point(lifts(p).left);
    Cx t = random_complex(rng);
    SpherePoint q{p.x + t * d[0], p.y + t * d[1], p.z + t * d[2]};
    ok = ok && on_sphere(q) && degenerate_pair(p, q);
    SpherePoint r = random_sphere_point(rng);
    if (std::abs(dot(p, r) - 1.0) > 1e-3) ok = ok && !degenerate_pair(p, r);
  }
  out.cases = cases;
  out.pass = ok;
  if (!ok) out.detail = "locus membership failed (seed " + std::to_string(seed) + ")";
  return out;
}

VerifyCheck check_oracle_agreement(const std::string& name, const Graph& g, std::uint64_t seed,
                                   int draws, const VerifyHooks& hooks) {
  VerifyCheck out{name};
  out.cases = draws;
  mpz_class recursion = hooks.count(to_count_problem(g));
  try {
    mpz_class oracle = oracle_count_stable(g, seed, draws);
    out.pass = oracle == recursion;
    if (!out.pass)
      out.detail = "oracle " + oracle.get_str() + " != recursion " + recursion.get_str();
  } catch (const std::runtime_error& e) {
    out.pass = false;
    out.detail = e.what();
  }
  return out;
}

VerifyCheck check_redraw_signal(const Graph& triangle) {
  VerifyCheck out{"degenerate-draw-signal"};
  out.cases = 1;
  DistanceAssignment a;
  a.values[Edge(1, 2)] = mpq_class(0);  // d = 0 puts the endpoints on a common ruling line
  a.values[Edge(1, 3)] = mpq_class(1, 3);
  a.values[Edge(2, 3)] = mpq_class(2, 5);
  OracleResult r = oracle_count(triangle, a);
  out.pass = !r.ok() && !r.redraw_reason.empty();
  if (!out.pass) out.detail = "expected a degenerate-draw signal for d=0";
  return out;
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed, const VerifyHooks& hooks) {
  VerifyHooks h = hooks;
  if (!h.count) h.count = [](const CountProblem& p) { return count_realizations(p); };

  const Graph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
  const Graph quad(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});

  VerifyReport report;
  report.checks.push_back(check_distance_identities(seed, 1000));
  report.checks.push_back(check_normalization(seed, 1000));
  report.checks.push_back(check_moebius_invariance(seed, 1000));
  report.checks.push_back(check_lift_geometry(seed, 1000));
  report.checks.push_back(check_degenerate_locus(seed, 500));
  report.checks.push_back(check_oracle_agreement("oracle-triangle", triangle, seed + 10, 5, h));
  report.checks.push_back(check_oracle_agreement("oracle-k4-minus-edge", quad, seed + 11, 5, h));
  report.checks.push_back(check_redraw_signal(triangle));
  return report;
}

}  // namespace sphere_laman
