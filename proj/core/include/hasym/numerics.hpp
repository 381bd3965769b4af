#pragma once

// Numerical layer: integration of h^3 (h'' + h') = 1 as the planar system
// x' = y, y' = x^-3 - y, the reduced first-order problem for g, the function
// G and the constant c, inversion of G, and the lower real Lambert branch.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hasym/dop853.hpp"
#include "hasym/radau.hpp"
#include "hasym/real.hpp"

namespace hasym {

/// h(t0) = h0 > 0, h'(t0) = h1.
struct InitialData {
  Real t0 = 0;
  Real h0 = 1;
  Real h1 = 1;

  /// Throws DomainError unless h0 > 0 and all fields are finite.
  void validate() const;
};

struct SolverConfig {
  Real rel_tol = Real(1e-10);
  Real abs_tol = Real(1e-12);
  long max_steps = 20'000'000;
  /// Split point S of the improper integral for c; 0 selects it from the
  /// series crossover.
  Real tail_split = 0;
  /// Absolute tolerance on fixed-point increments when inverting G.
  Real fixed_point_tol = Real(1e-12);
  int max_fixed_point_iter = 200;
  /// Number of terms of the small-z series for g used below the crossover.
  int series_order = 40;
  /// Time after t0 at which integrate_h hands over from the explicit pair to
  /// Radau IIA collocation; infinity keeps the explicit pair throughout.
  Real implicit_after = 40;

  /// Tolerances near binary128 resolution: rel 1e-28, abs 1e-30. Needed
  /// wherever the order-3 remainder at t = 1e6 (~1e-18) must be resolved.
  static SolverConfig high_accuracy();

  /// Throws DomainError for non-positive tolerances or budgets.
  void validate() const;
};

struct TrajectorySample {
  Real t;
  Real h;
  Real hp;
};

struct IntegratorStats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
  Real rel_tol = 0;
  Real abs_tol = 0;
};

struct IntegrateOptions {
  /// Times landed on exactly and always kept as samples.
  std::vector<Real> output_times;
  /// Keep the continuous extension of every step.
  bool dense = false;
  /// Keep every accepted step as a sample (otherwise only t0, the output
  /// times and t_max).
  bool keep_steps = true;
};

/// Numerical solution (h, h') on [t0, t_end].
class Trajectory {
 public:
  const std::vector<TrajectorySample>& samples() const { return samples_; }
  Real t_begin() const { return samples_.front().t; }
  Real t_end() const { return samples_.back().t; }
  bool has_dense() const { return !segments_.empty() || !colloc_.empty(); }
  const IntegratorStats& stats() const { return stats_; }

  /// Value at any t in [t_begin, t_end] from the dense output, or at a stored
  /// sample time when no dense output was kept. Throws RangeError otherwise.
  TrajectorySample at(const Real& t) const;

  /// Accumulated per-step local error estimates of h up to t: a conservative
  /// proxy for the global error.
  Real error_estimate(const Real& t) const;

  /// "t,h,hprime" with 17 significant digits.
  std::string to_csv() const;

 private:
  friend Trajectory integrate_h(const InitialData&, const Real&, const SolverConfig&, const IntegrateOptions&);

  std::vector<TrajectorySample> samples_;
  std::vector<Real> sample_error_;  // accumulated error estimate at each sample
  std::vector<ode::DenseSegment<2>> segments_;
  std::vector<Real> segment_error_;  // accumulated error estimate at segment end
  std::vector<ode::CollocationSegment<2>> colloc_;
  std::vector<Real> colloc_error_;
  IntegratorStats stats_;
};

/// Integrates x' = y, y' = x^-3 - y from data.t0 to t_max: DOP853 up to
/// t0 + cfg.implicit_after, Radau IIA(5) with step doubling afterwards.
/// Throws IntegrationError when positivity of h is lost or the step size
/// collapses.
Trajectory integrate_h(const InitialData& data, const Real& t_max, const SolverConfig& cfg = {},
                       const IntegrateOptions& options = {});

/// r(t) = t h(ln t) for each t > 0; RangeError if ln t is outside the
/// trajectory.
std::vector<std::pair<Real, Real>> map_to_radial(const Trajectory& traj, const std::vector<Real>& ts);

/// The larger root y of y - ln y = x (x > 1), i.e. -W_{-1}(-e^{-x}).
/// Newton from x + ln x, safeguarded by bisection on [1, 2x].
Real lambert_wm1_numeric(const Real& x, const SolverConfig& cfg = {});

/// |y e^{-y} - e^{-x}| / e^{-x}
Real lambert_relative_residual(const Real& x, const Real& y);

struct GProblemStats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
};

/// Solution of g'(z) = (1 - 1/g)/z^2 - (3/4) g / z on (0, z0] with g(z0) = g0,
/// together with G(x) = int_{4/z0}^{x} ds / g(4/s) and the constant c.
///
/// Numerically integrated from z0 down to a crossover z_c, below which the
/// small-z series sum alpha_k z^k is used. Immutable once built.
class GProblem {
 public:
  Real z0() const { return z0_; }
  Real g0() const { return g0_; }
  /// h0 = (4/z0)^(1/4); the lower limit of G is h0^4 = 4/z0.
  Real x0() const { return 4 / z0_; }
  Real z_c() const { return zc_; }
  /// S = 4/z_c: beyond it G and the c-integrand use the 1/g series.
  Real split_point() const { return 4 / zc_; }
  Real c() const { return c_; }
  const SolverConfig& config() const { return cfg_; }
  const GProblemStats& stats() const { return stats_; }

  /// g on (0, z0]; DomainError outside.
  Real g(const Real& z) const;
  /// G(x) for x >= h0^4; DomainError below.
  Real G(const Real& x) const;
  /// G'(x) = 1/g(4/x)
  Real G_prime(const Real& x) const;
  /// 1/g(4/s) - 1 + 3/s, the integrand of c.
  Real c_integrand(const Real& s) const;

  /// {"z0","g0","c","z_c","S","rel_tol","abs_tol","series_order",...}
  std::string summary_json() const;

 private:
  friend GProblem solve_g(const Real&, const Real&, const SolverConfig&);

  Real series_g(const Real& z) const;
  Real series_recip_tail(const Real& z) const;  // sum_{k>=2} beta_k z^k
  Real tail_integral(const Real& z) const;      // sum_{k>=2} 4 beta_k z^{k-1}/(k-1)
  // index of the segment containing z (segments run downward in z)
  std::size_t find_segment(const Real& z) const;

  Real z0_ = 0, g0_ = 0, zc_ = 0, c_ = 0;
  Real I_c_ = 0, J_c_ = 0;  // accumulated integrals at z_c
  SolverConfig cfg_;
  GProblemStats stats_;
  std::vector<Real> alpha_;
  std::vector<Real> beta_;
  int tail_terms_ = 0;  // beta terms used in tails
  // state (g, I, J); I(z) = int_z^{z0} 4 (1/g - 1 + 3w/4) / w^2 dw, J(z) = G(4/z)
  std::vector<ode::DenseSegment<3>> segments_;
};

/// Throws DomainError unless z0 > 0 and g0 > 0; AccuracyError if the series
/// crossover or the tail of the c-integral cannot meet the tolerances.
GProblem solve_g(const Real& z0, const Real& g0, const SolverConfig& cfg = {});

/// Reduced problem of the data (h0, h1) with h1 > 0: z0 = 4/h0^4, g0 = h0^3 h1.
GProblem solve_g(const InitialData& data, const SolverConfig& cfg = {});

Real compute_G(const Real& x, const GProblem& problem);

/// c = int_{h0^4}^{inf} (1/g(4/s) - 1 + 3/s) ds - h0^4 + 3 ln h0^4.
Real compute_c(const GProblem& problem);

struct CConstantInfo {
  Real c = 0;
  /// Time at which the reduction was applied (t0 when h1 > 0).
  Real tau = 0;
  Real h_tau = 0;
  Real hp_tau = 0;
};

/// c for arbitrary data, in absolute time: c_reduced(h(tau), h'(tau)) + 4 tau,
/// where tau = t0 if h1 > 0, otherwise a time past the first instant with
/// h' > 0.
CConstantInfo compute_c(const InitialData& data, const SolverConfig& cfg = {});

struct InvertGInfo {
  int iterations = 0;
  bool fixed_point = false;
  /// Largest observed ratio of consecutive fixed-point increments.
  Real max_ratio = 0;
};

/// y >= h0^4 with G(y) = x. Uses y_{n+1} = x + y_n - G(y_n) from y_0 = x
/// when x > 4 and the iterates behave as a contraction (monotone, ratio
/// <= 4/x); otherwise a safeguarded Newton-bisection. ConvergenceError when
/// the iteration cap is hit, DomainError for x < 0.
Real invert_G(const Real& x, const GProblem& problem, InvertGInfo* info = nullptr);

}  // namespace hasym
