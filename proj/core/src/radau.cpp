#include "hasym/radau.hpp"

#include <vector>

namespace hasym::ode {

namespace {

// Coefficients (ascending) of d^{s-1}/dx^{s-1} [x^{s-1} (x-1)^s].
std::vector<Real> node_polynomial(std::size_t s) {
  std::vector<Real> poly(2 * s, Real(0));
  // (x-1)^s expanded, shifted by x^{s-1}
  Real binom = 1;
  for (std::size_t k = 0; k <= s; ++k) {
    const Real sign = ((s - k) % 2 == 0) ? Real(1) : Real(-1);
    poly[k + s - 1] = sign * binom;
    binom = binom * Real(s - k) / Real(k + 1);
  }
  for (std::size_t d = 0; d + 1 < s; ++d) {
    std::vector<Real> next(poly.size() - 1, Real(0));
    for (std::size_t k = 1; k < poly.size(); ++k) next[k - 1] = poly[k] * Real(k);
    poly = std::move(next);
  }
  return poly;
}

Real horner(const std::vector<Real>& p, const Real& x) {
  Real acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

RadauCoefficients build() {
  constexpr std::size_t S = kRadauStages;
  const auto poly = node_polynomial(S);
  std::vector<Real> deriv(poly.size() - 1);
  for (std::size_t k = 1; k < poly.size(); ++k) deriv[k - 1] = poly[k] * Real(k);

  // Sign changes on a fine grid, then bisection and a Newton polish.
  RadauCoefficients rc;
  std::size_t found = 0;
  const int grid = 4000;
  Real prev_x = Real(1) / grid / 4;
  Real prev_v = horner(poly, prev_x);
  for (int i = 1; i <= grid && found < S - 1; ++i) {
    const Real x = Real(i) / grid;
    const Real v = horner(poly, x);
    if ((prev_v < 0) != (v < 0) && i < grid) {
      Real lo = prev_x, hi = x;
      for (int it = 0; it < 200; ++it) {
        const Real mid = (lo + hi) / 2;
        if ((horner(poly, mid) < 0) == (horner(poly, lo) < 0)) lo = mid; else hi = mid;
      }
      Real r = (lo + hi) / 2;
      for (int it = 0; it < 3; ++it) r -= horner(poly, r) / horner(deriv, r);
      rc.c[found++] = r;
    }
    prev_x = x;
    prev_v = v;
  }
  if (found != S - 1) throw IntegrationError("Radau IIA: node computation failed");
  rc.c[S - 1] = 1;

  // A V = C with V_jk = c_j^k, C_ik = c_i^{k+1}/(k+1); solve V^T a_i^T = C_i^T.
  std::array<std::array<Real, S>, S> vt{};
  for (std::size_t j = 0; j < S; ++j) {
    Real pw = 1;
    for (std::size_t k = 0; k < S; ++k) {
      vt[k][j] = pw;
      pw *= rc.c[j];
    }
  }
  for (std::size_t i = 0; i < S; ++i) {
    std::array<Real, S> rhs{};
    Real pw = rc.c[i];
    for (std::size_t k = 0; k < S; ++k) {
      rhs[k] = pw / Real(k + 1);
      pw *= rc.c[i];
    }
    if (!detail::lu_solve<S>(vt, rhs)) throw IntegrationError("Radau IIA: singular node matrix");
    rc.a[i] = rhs;
  }
  return rc;
}

}  // namespace

const RadauCoefficients& radau_coefficients() {
  static const RadauCoefficients rc = build();
  return rc;
}

}  // namespace hasym::ode
