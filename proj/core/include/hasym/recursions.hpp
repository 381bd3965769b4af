#pragma once

// Exact generators for the coefficient sequences and polynomial families of
// the asymptotic expansion of solutions of h^3 (h'' + h') = 1.

#include <cstddef>
#include <mutex>
#include <vector>

#include "hasym/bivariate_poly.hpp"
#include "hasym/rational.hpp"
#include "hasym/series.hpp"

namespace hasym {

/// alpha_0..alpha_N: coefficients of the formal solution g~(z) = sum alpha_k z^k
/// of (1 - 3/4 z g - z^2 g') g = 1.
struct AlphaSequence {
  std::vector<Rational> values;
  const Rational& operator[](std::size_t k) const { return values.at(k); }
  std::size_t size() const { return values.size(); }
};

/// beta_0..beta_N: coefficients of 1/g~(z).
struct BetaSequence {
  std::vector<Rational> values;
  const Rational& operator[](std::size_t k) const { return values.at(k); }
  std::size_t size() const { return values.size(); }
};

/// Consecutive members P_first..P_last of an indexed polynomial family.
class PolyFamily {
 public:
  PolyFamily() = default;
  PolyFamily(int first, std::vector<BivariatePoly> polys) : first_(first), polys_(std::move(polys)) {}

  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(polys_.size()) - 1; }
  bool empty() const { return polys_.empty(); }
  const BivariatePoly& at(int k) const;
  const std::vector<BivariatePoly>& polys() const { return polys_; }

 private:
  int first_ = 0;
  std::vector<BivariatePoly> polys_;
};

/// p_0..p_N in (c, z)
using PPolyFamily = PolyFamily;
/// q_1..q_N in (c, z)
using QPolyFamily = PolyFamily;
/// p~_0..p~_N in z only
using LambertPolyFamily = PolyFamily;

AlphaSequence gen_alpha(int N);
BetaSequence gen_beta(int N);
PPolyFamily gen_p(int N);
QPolyFamily gen_q(int N);
LambertPolyFamily gen_lambert_p(int N);

/// sum_{k<=N} alpha_k z^k
RationalSeries g_series(int N);

/// Substitutes the order-N truncation of g~ into (1 - 3/4 z g - z^2 g') g - 1
/// and returns the lowest power with a nonzero coefficient.
int ode_residual_order(int N);

/// Memoized, internally synchronized generator behind gen_p/gen_q/
/// gen_lambert_p. Families are extended incrementally: asking for a larger N
/// reuses every polynomial and power-sum column computed before.
class FamilyCache {
 public:
  static FamilyCache& shared();

  PPolyFamily p(int N);
  QPolyFamily q(int N);
  LambertPolyFamily lambert(int N);

 private:
  void extend_p(int N);  // caller holds mu_
  void extend_lambert(int N);

  std::mutex mu_;
  BetaSequence beta_;
  PowerSums<BivariatePoly> p_sums_;  // a_j = p_{j-1}
  std::vector<BivariatePoly> p_;
  std::vector<BivariatePoly> q_;     // q_[k-1] = q_k
  PowerSums<BivariatePoly> lambert_sums_;
  std::vector<BivariatePoly> lambert_;
};

}  // namespace hasym
