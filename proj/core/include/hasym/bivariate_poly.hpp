#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hasym/rational.hpp"
#include "hasym/real.hpp"

namespace hasym {

/// Exact sparse polynomial in two variables (c, z) with Rational
/// coefficients. Zero coefficients are never stored.
class BivariatePoly {
 public:
  /// (c power, z power)
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  BivariatePoly() = default;
  explicit BivariatePoly(const Rational& constant);
  explicit BivariatePoly(Terms terms);

  static BivariatePoly c();
  static BivariatePoly z();
  /// coef * c^c_pow * z^z_pow
  static BivariatePoly monomial(const Rational& coef, int c_pow, int z_pow);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int c_pow, int z_pow) const;

  /// -1 for the zero polynomial.
  int z_degree() const;
  int c_degree() const;
  int total_degree() const;

  /// d/dc
  BivariatePoly derivative_c() const;

  /// Coefficients are rounded to binary128 at evaluation time; Horner in z
  /// for each c power, then the c powers are summed.
  Real eval(const Real& c, const Real& z) const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  BivariatePoly& operator*=(const Rational& factor);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator-(BivariatePoly a) { return a *= Rational(-1); }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Rational& f) { return a *= f; }
  friend BivariatePoly operator*(const Rational& f, BivariatePoly a) { return a *= f; }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

inline bool is_zero(const BivariatePoly& p) { return p.is_zero(); }

/// Alias for readability at call sites that evaluate p_n(c; ln x) etc.
inline Real poly_eval(const BivariatePoly& p, const Real& c, const Real& z) {
  return p.eval(c, z);
}

/// Human-readable form in descending z powers, each z coefficient a
/// polynomial in c, e.g. "-27/2 z^2 + (90 + 9 c) z - 228 - 30 c - 3/2 c^2".
std::string to_display_string(const BivariatePoly& p);

/// BivariatePoly with coefficients pre-rounded to binary128, for repeated
/// evaluation on hot paths.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const BivariatePoly& p);

  Real eval(const Real& c, const Real& z) const;
  /// Value of d/dc at (c, z).
  Real eval_dc(const Real& c, const Real& z) const;

 private:
  // by_c_[i][j] = coefficient of c^i z^j
  std::vector<std::vector<Real>> by_c_;
};

}  // namespace hasym
