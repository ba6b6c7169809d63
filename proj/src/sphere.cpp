#include "sphere_laman/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace sphere_laman {

namespace {

constexpr Cx kI{0.0, 1.0};

double proj_norm(const ProjPoint& p) { return std::max(std::abs(p.s), std::abs(p.t)); }

ProjPoint scaled(const ProjPoint& p) {
  double n = proj_norm(p);
  if (n == 0.0) throw std::domain_error("projective point (0:0)");
  return {p.s / n, p.t / n};
}

Cx bracket(const ProjPoint& a, const ProjPoint& b) { return a.s * b.t - b.s * a.t; }

}  // namespace

Cx dot(const SpherePoint& p, const SpherePoint& q) { return p.x * q.x + p.y * q.y + p.z * q.z; }

bool on_sphere(const SpherePoint& p, double tol) { return std::abs(dot(p, p) - 1.0) <= tol; }

Cx spherical_distance(const SpherePoint& p, const SpherePoint& q) {
  return (1.0 - dot(p, q)) / 2.0;
}

bool degenerate_pair(const SpherePoint& p, const SpherePoint& q, double tol) {
  return std::abs(dot(p, q) - 1.0) <= tol;
}

// The ruling parameters through (x,y,z) are the roots of
//   (x+iz) a^2 + 2y ab + (iz-x) b^2 = 0,
// with discriminant 4(x^2+y^2+z^2) = 4. Two proportional representatives per
// root; the numerically larger one is returned. They cannot both vanish.
Lifts lifts(const SpherePoint& p, double tol) {
  if (!on_sphere(p, tol)) throw std::domain_error("lifts: point is not on the sphere");
  ProjPoint left_a{-(1.0 + p.y), p.x + kI * p.z};
  ProjPoint left_b{kI * p.z - p.x, 1.0 - p.y};
  ProjPoint right_a{1.0 - p.y, p.x + kI * p.z};
  ProjPoint right_b{p.x - kI * p.z, 1.0 + p.y};
  Lifts out;
  out.left = scaled(proj_norm(left_a) >= proj_norm(left_b) ? left_a : left_b);
  out.right = scaled(proj_norm(right_a) >= proj_norm(right_b) ? right_a : right_b);
  return out;
}

std::array<Cx, 3> conic_point(const ProjPoint& p) {
  return {p.s * p.s - p.t * p.t, 2.0 * p.s * p.t, kI * (p.s * p.s + p.t * p.t)};
}

Cx cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
               const ProjPoint& p4) {
  ProjPoint a = scaled(p1), b = scaled(p2), c = scaled(p3), d = scaled(p4);
  Cx num = bracket(c, a) * bracket(d, b);
  Cx den = bracket(c, b) * bracket(d, a);
  if (std::abs(den) <= 1e-12)
    throw std::domain_error("cross_ratio: undefined (coincident points)");
  return num / den;
}

double uniform_pm1(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

Cx random_complex(std::mt19937_64& rng) {
  double re = uniform_pm1(rng);
  double im = uniform_pm1(rng);
  return {re, im};
}

SpherePoint random_sphere_point(std::mt19937_64& rng) {
  SpherePoint p;
  p.x = random_complex(rng);
  p.y = random_complex(rng);
  p.z = std::sqrt(1.0 - p.x * p.x - p.y * p.y);
  return p;
}

}  // namespace sphere_laman
