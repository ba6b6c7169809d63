#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace sphere_laman {

// Sparse multivariate polynomial over Q in at most 8 variables. Small systems
// only: the elimination oracle works with a handful of low-degree terms, so
// an ordered term map is plenty.
class RatPoly {
public:
  static constexpr int kMaxVars = 8;
  using Expo = std::array<std::uint8_t, kMaxVars>;

  RatPoly() = default;
  static RatPoly constant(const mpq_class& c);
  static RatPoly variable(int var);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const mpq_class& constant_value() const;  // pre: is_constant() and not zero... 0 for zero
  int degree(int var) const;
  std::uint32_t vars_mask() const;  // bit v set iff variable v occurs

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly& operator+=(const RatPoly& o);
  bool operator==(const RatPoly& o) const { return terms_ == o.terms_; }

  // coefficient of var^k as a polynomial in the remaining variables
  RatPoly coeff(int var, int k) const;
  // substitute var := value; value must not involve var
  RatPoly substitute(int var, const RatPoly& value) const;
  mpq_class eval_univariate(int var, const mpq_class& x) const;  // pre: vars ⊆ {var}

  const std::map<Expo, mpq_class>& terms() const { return terms_; }
  std::string str() const;  // diagnostics

private:
  void add_term(const Expo& e, const mpq_class& c);
  std::map<Expo, mpq_class> terms_;
};

// Determinant of the Sylvester matrix of f and g with respect to var; f and g
// must both involve var. Vanishes iff f and g share a root (or both leading
// coefficients do).
RatPoly resultant(const RatPoly& f, const RatPoly& g, int var);

// Univariate helpers; every input must satisfy vars ⊆ {var}.
std::vector<mpq_class> uni_coeffs(const RatPoly& f, int var);
RatPoly uni_from_coeffs(const std::vector<mpq_class>& c, int var);
RatPoly uni_derivative(const RatPoly& f, int var);
RatPoly uni_gcd(const RatPoly& a, const RatPoly& b, int var);  // monic, or 0 for (0,0)

}  // namespace sphere_laman
