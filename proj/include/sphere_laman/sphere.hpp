#pragma once

#include <array>
#include <complex>
#include <random>

namespace sphere_laman {

using Cx = std::complex<double>;

// Point of P^1, written (s : t) != (0 : 0).
struct ProjPoint {
  Cx s{0.0, 0.0};
  Cx t{0.0, 0.0};
};

// Point of the complex sphere x^2 + y^2 + z^2 = 1.
struct SpherePoint {
  Cx x{0.0, 0.0};
  Cx y{0.0, 0.0};
  Cx z{0.0, 0.0};
};

Cx dot(const SpherePoint& p, const SpherePoint& q);
bool on_sphere(const SpherePoint& p, double tol = 1e-9);

// d(P,Q) = (1 - <P,Q>)/2: 0 for equal points, 1 for antipodal, 1/2 for
// perpendicular ones.
Cx spherical_distance(const SpherePoint& p, const SpherePoint& q);

// True iff <P,Q> = 1: exactly when P and Q share a lift, i.e. lie on a common
// ruling line of the quadric, and the edge equations for {P,Q} degenerate.
bool degenerate_pair(const SpherePoint& p, const SpherePoint& q, double tol = 1e-9);

struct Lifts {
  ProjPoint left, right;
};

// Parameters of the two ruling lines of the complexified sphere through p, one
// from each family. Closed form: the defining quadratic has constant
// discriminant, so this is total on the sphere; off-sphere input throws.
Lifts lifts(const SpherePoint& p, double tol = 1e-9);

// Isotropic direction attached to a lift parameter: (a:b) -> (a^2-b^2 : 2ab :
// i(a^2+b^2)). D = conic_point(l) satisfies <D,D> = 0, and for l a lift of P
// also <P,D> = 0, so the whole line P + span(D) lies on the sphere.
std::array<Cx, 3> conic_point(const ProjPoint& p);

// ((x3-x1)(x4-x2)) / ((x3-x2)(x4-x1)) in projective form; fixes the convention
// cross_ratio((1:0),(0:1),(1:1),(l:1)) = l. Throws std::domain_error when a
// coincidence makes the value undefined.
Cx cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
               const ProjPoint& p4);

// Test/diagnostic helpers with reproducible, implementation-independent draws.
double uniform_pm1(std::mt19937_64& rng);
Cx random_complex(std::mt19937_64& rng);
SpherePoint random_sphere_point(std::mt19937_64& rng);

}  // namespace sphere_laman
