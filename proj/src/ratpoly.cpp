#include "sphere_laman/ratpoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace sphere_laman {

void RatPoly::add_term(const Expo& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RatPoly RatPoly::constant(const mpq_class& c) {
  RatPoly p;
  p.add_term(Expo{}, c);
  return p;
}

RatPoly RatPoly::variable(int var) {
  if (var < 0 || var >= kMaxVars) throw std::invalid_argument("ratpoly: variable out of range");
  Expo e{};
  e[var] = 1;
  RatPoly p;
  p.add_term(e, 1);
  return p;
}

bool RatPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
}

const mpq_class& RatPoly::constant_value() const {
  static const mpq_class zero(0);
  if (terms_.empty()) return zero;
  if (!is_constant()) throw std::logic_error("ratpoly: not a constant");
  return terms_.begin()->second;
}

int RatPoly::degree(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
  return d;
}

std::uint32_t RatPoly::vars_mask() const {
  std::uint32_t mask = 0;
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < kMaxVars; ++v)
      if (e[v]) mask |= 1u << v;
  return mask;
}

RatPoly RatPoly::operator-() const {
  RatPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  RatPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  RatPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  RatPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e;
      for (int v = 0; v < kMaxVars; ++v) {
        int s = e1[v] + e2[v];
        if (s > 255) throw std::overflow_error("ratpoly: exponent overflow");
        e[v] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, c1 * c2);
    }
  return out;
}

RatPoly RatPoly::coeff(int var, int k) const {
  RatPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Expo e2 = e;
    e2[var] = 0;
    out.add_term(e2, c);
  }
  return out;
}

RatPoly RatPoly::substitute(int var, const RatPoly& value) const {
  if (value.degree(var) > 0)
    throw std::invalid_argument("ratpoly: substitution value involves the variable");
  const int d = degree(var);
  std::vector<RatPoly> powers(d + 1);
  powers[0] = constant(1);
  for (int k = 1; k <= d; ++k) powers[k] = powers[k - 1] * value;
  RatPoly out;
  for (int k = 0; k <= d; ++k) out += coeff(var, k) * powers[k];
  return out;
}

mpq_class RatPoly::eval_univariate(int var, const mpq_class& x) const {
  auto c = uni_coeffs(*this, var);
  mpq_class acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RatPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int v = 0; v < kMaxVars; ++v) {
      if (!e[v]) continue;
      os << "*x" << v;
      if (e[v] > 1) os << "^" << static_cast<int>(e[v]);
    }
  }
  return os.str();
}

namespace {

// Laplace expansion down the columns, memoized on the set of unused rows.
RatPoly det_minor(const std::vector<std::vector<RatPoly>>& a, std::uint32_t rows, int col,
                  std::map<std::uint32_t, RatPoly>& memo) {
  if (rows == 0) return RatPoly::constant(1);
  auto it = memo.find(rows);
  if (it != memo.end()) return it->second;
  RatPoly out;
  int sign = 1;
  for (std::uint32_t r = rows; r;) {
    int row = std::countr_zero(r);
    r &= r - 1;
    if (!a[row][col].is_zero()) {
      RatPoly sub = det_minor(a, rows & ~(1u << row), col + 1, memo);
      RatPoly term = a[row][col] * sub;
      out += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  memo.emplace(rows, out);
  return out;
}

}  // namespace

RatPoly resultant(const RatPoly& f, const RatPoly& g, int var) {
  const int df = f.degree(var), dg = g.degree(var);
  if (df == 0 || dg == 0)
    throw std::invalid_argument("resultant: both arguments must involve the variable");
  const int size = df + dg;
  std::vector<std::vector<RatPoly>> syl(size, std::vector<RatPoly>(size));
  for (int i = 0; i < dg; ++i)
    for (int k = 0; k <= df; ++k) syl[i][i + k] = f.coeff(var, df - k);
  for (int i = 0; i < df; ++i)
    for (int k = 0; k <= dg; ++k) syl[dg + i][i + k] = g.coeff(var, dg - k);
  std::map<std::uint32_t, RatPoly> memo;
  return det_minor(syl, (1u << size) - 1, 0, memo);
}

std::vector<mpq_class> uni_coeffs(const RatPoly& f, int var) {
  if ((f.vars_mask() & ~(1u << var)) != 0)
    throw std::invalid_argument("ratpoly: polynomial is not univariate in x" +
                                std::to_string(var));
  std::vector<mpq_class> c(f.degree(var) + 1, mpq_class(0));
  for (const auto& [e, coef] : f.terms()) c[e[var]] = coef;
  return c;
}

RatPoly uni_from_coeffs(const std::vector<mpq_class>& c, int var) {
  RatPoly out;
  RatPoly x = RatPoly::variable(var);
  RatPoly pw = RatPoly::constant(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out += RatPoly::constant(c[k]) * pw;
    pw = pw * x;
  }
  return out;
}

RatPoly uni_derivative(const RatPoly& f, int var) {
  auto c = uni_coeffs(f, var);
  std::vector<mpq_class> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(mpq_class(static_cast<long>(k)) * c[k]);
  return uni_from_coeffs(d, var);
}

namespace {

void trim(std::vector<mpq_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

RatPoly uni_gcd(const RatPoly& a, const RatPoly& b, int var) {
  std::vector<mpq_class> f = uni_coeffs(a, var), g = uni_coeffs(b, var);
  trim(f);
  trim(g);
  while (!g.empty()) {
    // f := f mod g
    while (f.size() >= g.size() && !f.empty()) {
      mpq_class q = f.back() / g.back();
      std::size_t off = f.size() - g.size();
      for (std::size_t k = 0; k < g.size(); ++k) f[off + k] -= q * g[k];
      trim(f);
    }
    std::swap(f, g);
  }
  trim(f);
  if (!f.empty())
    for (auto& c : f) c /= f.back();
  return uni_from_coeffs(f, var);
}

}  // namespace sphere_laman
