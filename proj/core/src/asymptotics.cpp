#include "hasym/asymptotics.hpp"

#include <algorithm>
#include <limits>

#include "hasym/errors.hpp"
#include "hasym/rational.hpp"
#include "hasym/recursions.hpp"

namespace hasym {

AsymptoticModel::AsymptoticModel(const Real& c, int order) : c_(c), order_(order) {
  if (order < 0) throw DomainError("AsymptoticModel: order must be non-negative");
  if (!isfinite(c)) throw DomainError("AsymptoticModel: c must be finite");
  auto polys = std::make_shared<Polys>();
  auto& cache = FamilyCache::shared();
  const PPolyFamily pf = cache.p(order);
  for (const auto& p : pf.polys()) polys->p.emplace_back(p);
  if (order >= 1) {
    const QPolyFamily qf = cache.q(order);
    for (const auto& q : qf.polys()) polys->q.emplace_back(q);
  }
  polys_ = std::move(polys);
}

AsymptoticModel AsymptoticModel::with_c(const Real& c) const {
  AsymptoticModel m = *this;
  m.c_ = c;
  return m;
}

namespace {

void require_order(int n, int order) {
  if (n < 0 || n > order) {
    throw DomainError("expansion order " + std::to_string(n) + " outside 0.." + std::to_string(order));
  }
}

}  // namespace

Real AsymptoticModel::A(int n, const Real& t) const {
  require_order(n, order_);
  if (!(t > 0)) throw DomainError("A_n(c; t) needs t > 0");
  const Real z = log(4 * t);
  Real sum = 0;
  Real tk = 1;
  for (int k = 1; k <= n; ++k) {
    tk *= t;
    sum += polys_->q[static_cast<std::size_t>(k - 1)].eval(c_, z) / tk;
  }
  return pow(4 * t, Real(0.25)) * (1 + sum);
}

Real AsymptoticModel::dA_dc(int n, const Real& t) const {
  require_order(n, order_);
  if (!(t > 0)) throw DomainError("A_n(c; t) needs t > 0");
  const Real z = log(4 * t);
  Real sum = 0;
  Real tk = 1;
  for (int k = 1; k <= n; ++k) {
    tk *= t;
    sum += polys_->q[static_cast<std::size_t>(k - 1)].eval_dc(c_, z) / tk;
  }
  return pow(4 * t, Real(0.25)) * sum;
}

Real AsymptoticModel::Ginv(int n, const Real& x) const {
  require_order(n, order_);
  if (!(x > 1)) throw DomainError("the G^{-1} expansion needs x > 1");
  const Real z = log(x);
  Real sum = polys_->p[0].eval(c_, z);
  Real xk = 1;
  for (int k = 1; k <= n; ++k) {
    xk *= x;
    sum += polys_->p[static_cast<std::size_t>(k)].eval(c_, z) / xk;
  }
  return x + sum;
}

Real eval_A_n(const AsymptoticModel& model, int n, const Real& t) { return model.A(n, t); }

Real eval_Ginv_asympt(const Real& c, int n, const Real& x) { return AsymptoticModel(c, n).Ginv(n, x); }

Real eval_G_asympt(const Real& c, int N, const Real& x) {
  if (N < 0) throw DomainError("eval_G_asympt: N must be non-negative");
  if (!(x > 0)) throw DomainError("eval_G_asympt: x must be positive");
  const BetaSequence beta = gen_beta(N + 1);
  Real sum = 0;
  Real u = 1;
  for (int k = 1; k <= N; ++k) {
    u *= 4 / x;
    sum += to_real(beta[static_cast<std::size_t>(k + 1)]) / k * u;
  }
  return x - 3 * log(x) + c - 4 * sum;
}

Real initial_c_guess(const Real& t, const Real& h) {
  return 3 * log(4 * t) - 16 * t * (h * pow(4 * t, Real(-0.25)) - 1);
}

namespace {

Real fit_with(const AsymptoticModel& base, int n, const Real& t, const Real& h) {
  if (!(t > 1)) throw DomainError("fit_c: t must exceed 1");
  Real c = initial_c_guess(t, h);
  if (n == 0) return c;
  Real last_step = std::numeric_limits<Real>::infinity();
  const Real noise = 1024 * std::numeric_limits<Real>::epsilon() * 16 * t;
  for (int it = 0; it < 100; ++it) {
    const AsymptoticModel m = base.with_c(c);
    const Real d = m.dA_dc(n, t);
    if (d == 0 || !isfinite(d)) break;
    const Real step = (m.A(n, t) - h) / d;
    c -= step;
    const Real mag = abs(step);
    if (mag <= noise * (1 + abs(c))) return c;
    if (it > 3 && mag >= last_step) return c;  // stalled at rounding level
    last_step = mag;
  }
  throw ConvergenceError("fit_c: Newton iteration did not converge at t = " + format_real(t));
}

}  // namespace

Real fit_c(int n, const Real& t, const Real& h) {
  return fit_with(AsymptoticModel(0, std::max(n, 1)), n, t, h);
}

Real fit_c_from_trajectory(const Trajectory& traj, int n, const Real& t_fit) {
  return fit_c(n, t_fit, traj.at(t_fit).h);
}

FitResult fit_c_multi(const std::function<Real(const Real&)>& h, int n, const std::vector<Real>& t_fit,
                      const Real& tol) {
  if (t_fit.empty()) throw DomainError("fit_c_multi: no fit times");
  const AsymptoticModel base(0, std::max(n, 1));
  FitResult r;
  r.t_fit = t_fit;
  std::sort(r.t_fit.begin(), r.t_fit.end());
  for (const auto& t : r.t_fit) r.values.push_back(fit_with(base, n, t, h(t)));
  const auto [lo, hi] = std::minmax_element(r.values.begin(), r.values.end());
  r.spread = *hi - *lo;
  r.c = r.values.back();
  if (r.spread > tol) {
    throw AccuracyError("fitted c varies by " + format_real(r.spread, 3) + " across fit times (tolerance " +
                        format_real(tol, 3) + ")");
  }
  return r;
}

HSamples sample_trajectory(const Trajectory& traj, const std::vector<Real>& grid) {
  HSamples s;
  s.source = "trajectory";
  for (const auto& t : grid) {
    s.t.push_back(t);
    s.h.push_back(traj.at(t).h);
    s.error.push_back(traj.error_estimate(t));
  }
  return s;
}

HSamples sample_synthetic(const AsymptoticModel& model, int order, const std::vector<Real>& grid) {
  HSamples s;
  s.source = "synthetic A_" + std::to_string(order);
  for (const auto& t : grid) {
    s.t.push_back(t);
    s.h.push_back(model.A(order, t));
    s.error.push_back(0);
  }
  return s;
}

Real remainder_scale(int n, const Real& t) {
  if (!(t > 1)) throw DomainError("remainder scale needs t > 1");
  return pow(4 * t, Real(0.25)) * pow(log(t) / t, n + 1);
}

namespace {

void require_increasing(const std::vector<Real>& grid, const Real& lower, const char* what) {
  if (grid.empty()) throw DomainError(std::string(what) + ": empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > lower)) throw DomainError(std::string(what) + ": grid point " + format_real(grid[i]) + " too small");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError(std::string(what) + ": grid must be strictly increasing");
  }
}

Real growth_of(const Real& first, const Real& last) {
  if (first > 0) return last / first;
  return last > 0 ? std::numeric_limits<Real>::infinity() : Real(0);
}

}  // namespace

RemainderReport remainder_study(const AsymptoticModel& model, const HSamples& samples, int n_max,
                                const StudyOptions& options) {
  require_order(n_max, model.order());
  require_increasing(samples.t, 1, "remainder_study");
  RemainderReport rep;
  rep.c = model.c();
  rep.source = samples.source;
  rep.growth_limit = options.growth_limit;
  rep.pass = true;
  for (int n = 0; n <= n_max; ++n) {
    RemainderSummary sum{n, 0, 0, 0, 0, false};
    for (std::size_t i = 0; i < samples.t.size(); ++i) {
      const Real& t = samples.t[i];
      const Real scale = remainder_scale(n, t);
      if (samples.error[i] > options.gating_fraction * scale) {
        throw AccuracyError("trajectory error estimate " + format_real(samples.error[i], 3) + " at t = " +
                            format_real(t, 6) + " exceeds " + format_real(options.gating_fraction, 2) +
                            " of the order-" + std::to_string(n) + " remainder scale " + format_real(scale, 3));
      }
      const Real A = model.A(n, t);
      const Real ratio = abs(samples.h[i] - A) / scale;
      if (!isfinite(ratio)) throw AccuracyError("non-finite remainder ratio at t = " + format_real(t, 6));
      rep.rows.push_back({n, t, samples.h[i], A, ratio});
      if (i == 0) sum.first_ratio = ratio;
      sum.last_ratio = ratio;
      sum.max_ratio = std::max(sum.max_ratio, ratio);
    }
    sum.growth = growth_of(sum.first_ratio, sum.last_ratio);
    sum.pass = sum.last_ratio <= options.growth_limit * sum.first_ratio;
    rep.pass = rep.pass && sum.pass;
    rep.summary.push_back(sum);
  }
  return rep;
}

Real shift_invariance_check(const AsymptoticModel& model, int n, const Real& s, const std::vector<Real>& t_grid) {
  require_order(n, model.order());
  require_increasing(t_grid, std::max(Real(1), Real(-s)), "shift_invariance_check");
  const AsymptoticModel shifted = model.with_c(model.c() - 4 * s);
  Real worst = 0;
  for (const auto& t : t_grid) {
    const Real dev = abs(model.A(n, t + s) - shifted.A(n, t));
    worst = std::max(worst, Real(dev / (pow(t, Real(0.25)) * pow(log(t) / t, n + 1))));
  }
  return worst;
}

Real lambert_series(int n, const Real& x) {
  if (n < 0) throw DomainError("lambert_series: n must be non-negative");
  if (!(x > 1)) throw DomainError("lambert_series: x must exceed 1");
  const LambertPolyFamily fam = FamilyCache::shared().lambert(n);
  const Real z = log(x);
  Real sum = 0;
  Real xk = 1;
  for (int k = 0; k <= n; ++k) {
    sum += fam.at(k).eval(0, z) / xk;
    xk *= x;
  }
  return x + sum;
}

LambertReport lambert_compare(int n, const std::vector<Real>& x_grid, const Real& growth_limit) {
  require_increasing(x_grid, 1, "lambert_compare");
  LambertReport rep;
  rep.n = n;
  rep.growth_limit = growth_limit;
  rep.max_residual = 0;
  for (const auto& x : x_grid) {
    LambertRow row;
    row.x = x;
    row.y_numeric = lambert_wm1_numeric(x);
    row.series = lambert_series(n, x);
    row.normalized = abs(row.y_numeric - row.series) / pow(log(x) / x, n + 1);
    row.residual = lambert_relative_residual(x, row.y_numeric);
    rep.max_residual = std::max(rep.max_residual, row.residual);
    rep.rows.push_back(row);
  }
  rep.growth = growth_of(rep.rows.front().normalized, rep.rows.back().normalized);
  rep.pass = rep.rows.back().normalized <= growth_limit * rep.rows.front().normalized &&
             rep.max_residual <= Real(1e-12);
  return rep;
}

}  // namespace hasym
