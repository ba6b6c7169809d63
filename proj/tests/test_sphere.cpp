#include <doctest.h>

#include <cmath>
#include <random>

#include "sphere_laman/sphere.hpp"

using namespace sphere_laman;

namespace {

bool proj_equal(const ProjPoint& a, const ProjPoint& b, double tol = 1e-9) {
  return std::abs(a.s * b.t - b.s * a.t) <= tol;
}

bool proportional3(const std::array<Cx, 3>& a, const std::array<Cx, 3>& b, double tol = 1e-9) {
  return std::abs(a[0] * b[1] - a[1] * b[0]) <= tol && std::abs(a[0] * b[2] - a[2] * b[0]) <= tol &&
         std::abs(a[1] * b[2] - a[2] * b[1]) <= tol;
}

const SpherePoint kPx{1.0, 0.0, 0.0};

}  // namespace

TEST_CASE("spherical distance anchor values") {
  SpherePoint py{0.0, 1.0, 0.0};
  CHECK(std::abs(spherical_distance(kPx, kPx)) <= 1e-12);
  CHECK(std::abs(spherical_distance(kPx, SpherePoint{-1.0, 0.0, 0.0}) - 1.0) <= 1e-12);
  CHECK(std::abs(spherical_distance(kPx, py) - 0.5) <= 1e-12);
}

TEST_CASE("lifts at reference points") {
  Lifts lx = lifts(kPx);
  CHECK(proj_equal(lx.left, {-1.0, 1.0}));
  CHECK(proj_equal(lx.right, {1.0, 1.0}));

  // (c, s, 0) with c = 3/5, s = 4/5
  Lifts lq = lifts(SpherePoint{0.6, 0.8, 0.0});
  CHECK(proj_equal(lq.left, {-1.8, 0.6}));
  CHECK(proj_equal(lq.right, {0.2, 0.6}));

  // poles of the chart: the alternative representatives take over
  Lifts lp = lifts(SpherePoint{0.0, 1.0, 0.0});
  CHECK(proj_equal(lp.left, {1.0, 0.0}));
  CHECK(proj_equal(lp.right, {0.0, 1.0}));
  Lifts lm = lifts(SpherePoint{0.0, -1.0, 0.0});
  CHECK(proj_equal(lm.left, {0.0, 1.0}));
  CHECK(proj_equal(lm.right, {1.0, 0.0}));

  CHECK_THROWS_AS(lifts(SpherePoint{1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("lift pairs stay distinct and isotropic") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 300; ++it) {
    SpherePoint p = random_sphere_point(rng);
    REQUIRE(on_sphere(p));
    Lifts l = lifts(p);
    CHECK(!proj_equal(l.left, l.right, 1e-12));
    for (const ProjPoint& pt : {l.left, l.right}) {
      auto d = conic_point(pt);
      CHECK(std::abs(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) <= 1e-9);
      CHECK(std::abs(p.x * d[0] + p.y * d[1] + p.z * d[2]) <= 1e-9);
    }
  }
}

TEST_CASE("conic embedding reference values") {
  // lifts of (1,0,0) embed to (0 : ±i : 1)
  Lifts lx = lifts(kPx);
  CHECK(proportional3(conic_point(lx.left), {Cx(0), Cx(0, 1), Cx(1)}));
  CHECK(proportional3(conic_point(lx.right), {Cx(0), Cx(0, -1), Cx(1)}));
}

TEST_CASE("degenerate pair detection") {
  CHECK(degenerate_pair(kPx, kPx));
  CHECK(!degenerate_pair(kPx, SpherePoint{-1.0, 0.0, 0.0}));
  CHECK(!degenerate_pair(kPx, SpherePoint{0.0, 1.0, 0.0}));
  // distinct point on a shared ruling line: (1, t, it) keeps the right lift at (1:1)
  SpherePoint q{1.0, Cx(0.25), Cx(0.0, 0.25)};
  REQUIRE(on_sphere(q));
  CHECK(degenerate_pair(kPx, q));
  CHECK(proj_equal(lifts(kPx).right, lifts(q).right, 1e-9));
}

TEST_CASE("cross ratio convention") {
  auto cr = [](Cx a, Cx b, Cx c, Cx d) {
    return cross_ratio({a, 1.0}, {b, 1.0}, {c, 1.0}, {d, 1.0});
  };
  // affine formula ((x3-x1)(x4-x2)) / ((x3-x2)(x4-x1))
  CHECK(std::abs(cr(0.0, 1.0, 2.0, 3.0) - Cx(4.0 / 3.0)) <= 1e-12);
  // normalization: cross_ratio((1:0),(0:1),(1:1),(l:1)) = l
  std::mt19937_64 rng(59);
  for (int it = 0; it < 100; ++it) {
    Cx l = 3.0 * random_complex(rng);
    CHECK(std::abs(cross_ratio({1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {l, 1.0}) - l) <= 1e-9);
  }
  // coincidences in a denominator bracket leave the value undefined
  CHECK_THROWS_AS(cross_ratio({1.0, 1.0}, {2.0, 1.0}, {2.0, 1.0}, {3.0, 1.0}),
                  std::domain_error);
  CHECK_THROWS_AS(cross_ratio({3.0, 1.0}, {2.0, 1.0}, {1.0, 1.0}, {3.0, 1.0}),
                  std::domain_error);
  // a repeated first pair is not one: the value degenerates to 1
  CHECK(std::abs(cross_ratio({1.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {3.0, 1.0}) - Cx(1.0)) <=
        1e-12);
}

TEST_CASE("cross ratio is invariant under the pair-swap group") {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 100; ++it) {
    ProjPoint p1{random_complex(rng), random_complex(rng)};
    ProjPoint p2{random_complex(rng), random_complex(rng)};
    ProjPoint p3{random_complex(rng), random_complex(rng)};
    ProjPoint p4{random_complex(rng), random_complex(rng)};
    Cx base;
    try {
      base = cross_ratio(p1, p2, p3, p4);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(std::abs(cross_ratio(p2, p1, p4, p3) - base) <= 1e-6);
    CHECK(std::abs(cross_ratio(p3, p4, p1, p2) - base) <= 1e-6);
    CHECK(std::abs(cross_ratio(p4, p3, p2, p1) - base) <= 1e-6);
  }
}

TEST_CASE("distance equals the lift cross ratio") {
  // P = (1,0,0), Q = (3/5, 4/5, 0): d = 1/5 by both identities
  SpherePoint q{0.6, 0.8, 0.0};
  Cx d = spherical_distance(kPx, q);
  CHECK(std::abs(d - Cx(0.2)) <= 1e-12);
  Lifts lp = lifts(kPx), lq = lifts(q);
  Cx cr = cross_ratio(lp.left, lp.right, lq.left, lq.right);
  CHECK(std::abs(cr / (cr - 1.0) - d) <= 1e-12);
  CHECK(std::abs(cross_ratio(lp.left, lq.right, lq.left, lp.right) - d) <= 1e-12);

  std::mt19937_64 rng(67);
  int done = 0;
  while (done < 300) {
    SpherePoint a = random_sphere_point(rng), b = random_sphere_point(rng);
    Cx dist = spherical_distance(a, b);
    if (std::abs(dist) < 0.05 || std::abs(dist - 1.0) < 0.05 || std::abs(dist) > 20.0) continue;
    Lifts la = lifts(a), lb = lifts(b);
    Cx r1;
    try {
      r1 = cross_ratio(la.left, la.right, lb.left, lb.right);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(std::abs(r1 / (r1 - 1.0) - dist) <= 1e-9);
    CHECK(std::abs(cross_ratio(la.left, lb.right, lb.left, la.right) - dist) <= 1e-9);
    ++done;
  }
}
