#pragma once

// Asymptotic approximants of h, G and G^{-1}, fitting of c, and the
// verification studies built on them.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hasym/bivariate_poly.hpp"
#include "hasym/numerics.hpp"
#include "hasym/real.hpp"

namespace hasym {

/// The constant c together with q_1..q_N and p_0..p_N from the exact
/// pipeline, rounded to binary128 for evaluation.
class AsymptoticModel {
 public:
  AsymptoticModel(const Real& c, int order);

  const Real& c() const { return c_; }
  int order() const { return order_; }
  /// Same polynomials, different constant.
  AsymptoticModel with_c(const Real& c) const;

  /// A_n(c; t) = (4t)^(1/4) (1 + sum_{k=1}^{n} q_k(c; ln 4t) / t^k)
  Real A(int n, const Real& t) const;
  /// dA_n/dc at (c, t)
  Real dA_dc(int n, const Real& t) const;
  /// x + p_0(c; ln x) + sum_{k=1}^{n} p_k(c; ln x) / x^k
  Real Ginv(int n, const Real& x) const;

 private:
  struct Polys {
    std::vector<NumericPoly> q;  // q[k-1] = q_k
    std::vector<NumericPoly> p;  // p[k] = p_k
  };

  Real c_;
  int order_;
  std::shared_ptr<const Polys> polys_;
};

Real eval_A_n(const AsymptoticModel& model, int n, const Real& t);

/// Truncation of the G^{-1} expansion through p_n (n = 0 gives x + 3 ln x - c).
Real eval_Ginv_asympt(const Real& c, int n, const Real& x);

/// x - 3 ln x + c - 4 sum_{k=1}^{N} beta_{k+1}/k (4/x)^k
Real eval_G_asympt(const Real& c, int N, const Real& x);

/// The closed-form order-1 estimate 3 ln(4t) - 16 t (h (4t)^{-1/4} - 1).
Real initial_c_guess(const Real& t, const Real& h);

/// Solves A_n(c; t) = h for c by Newton's method from the order-1 estimate.
/// ConvergenceError if the iteration stalls.
Real fit_c(int n, const Real& t, const Real& h);

/// fit_c at t_fit using h(t_fit) from the trajectory.
Real fit_c_from_trajectory(const Trajectory& traj, int n, const Real& t_fit);

struct FitResult {
  Real c = 0;       // value at the largest t_fit
  Real spread = 0;  // max - min over all t_fit
  std::vector<Real> t_fit;
  std::vector<Real> values;
};

/// fit_c at several times; AccuracyError when the spread exceeds tol.
FitResult fit_c_multi(const std::function<Real(const Real&)>& h, int n, const std::vector<Real>& t_fit,
                      const Real& tol);

/// h values on a grid with an estimate of their absolute error.
struct HSamples {
  std::vector<Real> t;
  std::vector<Real> h;
  std::vector<Real> error;
  std::string source;
};

HSamples sample_trajectory(const Trajectory& traj, const std::vector<Real>& grid);
/// Synthetic h := A_order(c; t), error-free by construction.
HSamples sample_synthetic(const AsymptoticModel& model, int order, const std::vector<Real>& grid);

/// (4t)^(1/4) (ln t / t)^(n+1)
Real remainder_scale(int n, const Real& t);

struct RemainderRow {
  int n;
  Real t;
  Real h;
  Real A;
  Real ratio;
};

struct RemainderSummary {
  int n;
  Real first_ratio;
  Real last_ratio;
  Real max_ratio;
  /// last / first
  Real growth;
  bool pass;
};

struct RemainderReport {
  Real c;
  std::string source;
  Real growth_limit;
  std::vector<RemainderRow> rows;
  std::vector<RemainderSummary> summary;
  bool pass = false;
};

struct StudyOptions {
  /// "bounded" means R_n(last) <= growth_limit * R_n(first).
  Real growth_limit = 10;
  /// Largest admissible error estimate, as a fraction of the remainder scale.
  Real gating_fraction = Real(0.01);
};

/// Normalized remainders R_n(t) = |h(t) - A_n(c;t)| / remainder_scale(n, t)
/// for n = 0..n_max. AccuracyError when the error estimate of h exceeds the
/// gating fraction of the scale at any grid point.
RemainderReport remainder_study(const AsymptoticModel& model, const HSamples& samples, int n_max,
                                const StudyOptions& options = {});

/// max over t of |A_n(c; t+s) - A_n(c-4s; t)| / (t^(1/4) (ln t/t)^(n+1))
Real shift_invariance_check(const AsymptoticModel& model, int n, const Real& s, const std::vector<Real>& t_grid);

struct LambertRow {
  Real x;
  Real y_numeric;
  Real series;
  Real normalized;  // |y - series| / (ln x / x)^(n+1)
  Real residual;    // |y e^{-y} - e^{-x}| / e^{-x}
};

struct LambertReport {
  int n;
  std::vector<LambertRow> rows;
  Real growth_limit;
  Real growth;
  Real max_residual;
  bool pass = false;
};

/// x + sum_{k=0}^{n} p~_k(ln x) / x^k
Real lambert_series(int n, const Real& x);

LambertReport lambert_compare(int n, const std::vector<Real>& x_grid, const Real& growth_limit = 10);

// Serialization of study reports.
std::string to_json(const RemainderReport& report);
std::string to_csv(const RemainderReport& report);
std::string to_json(const LambertReport& report);
std::string to_csv(const LambertReport& report);

}  // namespace hasym
