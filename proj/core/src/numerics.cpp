#include "hasym/numerics.hpp"

#include <algorithm>
#include <sstream>

#include "hasym/errors.hpp"

namespace hasym {

void InitialData::validate() const {
  if (!isfinite(t0) || !isfinite(h0) || !isfinite(h1)) throw DomainError("initial data must be finite");
  if (h0 <= 0) throw DomainError("initial data: h0 must be positive");
}

SolverConfig SolverConfig::high_accuracy() {
  SolverConfig cfg;
  cfg.rel_tol = Real(1e-28);
  cfg.abs_tol = Real(1e-30);
  cfg.fixed_point_tol = Real(1e-28);
  return cfg;
}

void SolverConfig::validate() const {
  if (!(rel_tol > 0) || !(abs_tol > 0)) throw DomainError("tolerances must be positive");
  if (!(fixed_point_tol > 0)) throw DomainError("fixed-point tolerance must be positive");
  if (max_steps <= 0 || max_fixed_point_iter <= 0) throw DomainError("iteration budgets must be positive");
  if (tail_split < 0) throw DomainError("tail split point must be non-negative");
  if (!(implicit_after >= 0)) throw DomainError("implicit_after must be non-negative");
  if (series_order < 4) throw DomainError("series order must be at least 4");
}

TrajectorySample Trajectory::at(const Real& t) const {
  if (t < t_begin() || t > t_end()) {
    throw RangeError("trajectory covers [" + format_real(t_begin()) + ", " + format_real(t_end()) +
                     "], queried t = " + format_real(t));
  }
  if (!has_dense()) {
    auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                               [](const TrajectorySample& s, const Real& v) { return s.t < v; });
    if (it == samples_.end() || it->t != t) {
      throw RangeError("no dense output kept and t = " + format_real(t) + " is not a sample time");
    }
    return *it;
  }
  if (!colloc_.empty() && t >= colloc_.front().t_old) {
    auto it = std::upper_bound(colloc_.begin(), colloc_.end(), t,
                               [](const Real& v, const ode::CollocationSegment<2>& s) { return v < s.t_old; });
    const auto y = std::prev(it)->eval(t);
    return {t, y[0], y[1]};
  }
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](const Real& v, const ode::DenseSegment<2>& s) { return v < s.t_old; });
  const auto& seg = it == segments_.begin() ? *it : *std::prev(it);
  const auto y = seg.eval(t);
  return {t, y[0], y[1]};
}

Real Trajectory::error_estimate(const Real& t) const {
  if (t <= t_begin()) return 0;
  if (!colloc_.empty() && t >= colloc_.front().t_old) {
    auto it = std::upper_bound(colloc_.begin(), colloc_.end(), t,
                               [](const Real& v, const ode::CollocationSegment<2>& s) { return v < s.t_old; });
    return colloc_error_[static_cast<std::size_t>(std::distance(colloc_.begin(), it)) - 1];
  }
  if (has_dense()) {
    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](const Real& v, const ode::DenseSegment<2>& s) { return v < s.t_old; });
    const std::size_t i = static_cast<std::size_t>(std::distance(segments_.begin(), it));
    // error accumulated through the end of the step containing t
    return segment_error_[i == 0 ? 0 : i - 1];
  }
  auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                             [](const TrajectorySample& s, const Real& v) { return s.t < v; });
  if (it == samples_.end()) return sample_error_.back();
  return sample_error_[static_cast<std::size_t>(std::distance(samples_.begin(), it))];
}

std::string Trajectory::to_csv() const {
  std::ostringstream os;
  os << "t,h,hprime\n";
  for (const auto& s : samples_) {
    os << format_real(s.t) << ',' << format_real(s.h) << ',' << format_real(s.hp) << '\n';
  }
  return os.str();
}

Trajectory integrate_h(const InitialData& data, const Real& t_max, const SolverConfig& cfg,
                       const IntegrateOptions& options) {
  data.validate();
  cfg.validate();
  if (!(t_max > data.t0)) throw DomainError("integrate_h: t_max must exceed t0");

  std::vector<Real> stops;
  for (const auto& t : options.output_times) {
    if (t > data.t0 && t < t_max) stops.push_back(t);
  }
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  Trajectory traj;
  traj.samples_.push_back({data.t0, data.h0, data.h1});
  traj.sample_error_.push_back(0);

  ode::Dop853Options opt;
  opt.rel_tol = cfg.rel_tol;
  opt.abs_tol = cfg.abs_tol;
  opt.max_steps = cfg.max_steps;
  opt.dense = options.dense;

  auto rhs = [](const Real&, const ode::State<2>& s, ode::State<2>& out) {
    out[0] = s[1];
    out[1] = 1 / (s[0] * s[0] * s[0]) - s[1];
  };

  Real accumulated = 0;
  std::size_t next_stop = 0;
  auto record = [&](const Real& t, const ode::State<2>& y) {
    if (!(y[0] > 0)) {
      throw IntegrationError("h lost positivity at t = " + format_real(t));
    }
    bool is_stop = false;
    while (next_stop < stops.size() && stops[next_stop] <= t) {
      is_stop = is_stop || stops[next_stop] == t;
      ++next_stop;
    }
    if (options.keep_steps || is_stop || t == t_max) {
      traj.samples_.push_back({t, y[0], y[1]});
      traj.sample_error_.push_back(accumulated);
    }
  };
  ode::State<2> last_state{};
  auto explicit_step = [&](const ode::AcceptedStep<2>& step) {
    accumulated += step.local_error[0];
    if (options.dense) {
      traj.segments_.push_back(step.segment);
      traj.segment_error_.push_back(accumulated);
    }
    last_state = step.y;
    record(step.t, step.y);
    return true;
  };

  const Real t_switch = isfinite(cfg.implicit_after) ? Real(data.t0 + cfg.implicit_after) : t_max;
  const Real t_mid = std::min(t_max, std::max(t_switch, data.t0));
  ode::State<2> y{data.h0, data.h1};
  IntegratorStats& stats = traj.stats_;
  if (t_mid > data.t0) {
    std::vector<Real> first;
    for (const auto& t : stops) if (t < t_mid) first.push_back(t);
    const auto st = ode::dop853_integrate<2>(rhs, data.t0, y, t_mid, first, opt, explicit_step);
    stats.accepted += st.accepted;
    stats.rejected += st.rejected;
    stats.evaluations += st.evaluations;
    y = last_state;
  }
  if (t_max > t_mid) {
    ode::RadauOptions ropt;
    ropt.rel_tol = cfg.rel_tol;
    ropt.abs_tol = cfg.abs_tol;
    ropt.max_steps = cfg.max_steps;
    ropt.initial_step = std::min(Real(0.125), Real(t_max - t_mid));
    auto jac = [](const Real&, const ode::State<2>& s, std::array<std::array<Real, 2>, 2>& J) {
      const Real x2 = s[0] * s[0];
      J[0][0] = 0;
      J[0][1] = 1;
      J[1][0] = -3 / (x2 * x2);
      J[1][1] = -1;
    };
    auto implicit_step = [&](const ode::RadauAccepted<2>& step) {
      accumulated += step.local_error[0];
      if (options.dense) {
        traj.colloc_.push_back(step.first_half);
        traj.colloc_error_.push_back(accumulated);
        traj.colloc_.push_back(step.second_half);
        traj.colloc_error_.push_back(accumulated);
      }
      record(step.t, step.y);
      return true;
    };
    const auto st = ode::radau_integrate<2>(rhs, jac, t_mid, y, t_max, stops, ropt, implicit_step);
    stats.accepted += st.accepted;
    stats.rejected += st.rejected;
    stats.evaluations += st.evaluations;
  }
  stats.rel_tol = cfg.rel_tol;
  stats.abs_tol = cfg.abs_tol;
  return traj;
}

std::vector<std::pair<Real, Real>> map_to_radial(const Trajectory& traj, const std::vector<Real>& ts) {
  std::vector<std::pair<Real, Real>> out;
  out.reserve(ts.size());
  for (const auto& t : ts) {
    if (!(t > 0)) throw RangeError("map_to_radial: t must be positive");
    out.emplace_back(t, t * traj.at(log(t)).h);
  }
  return out;
}

Real lambert_relative_residual(const Real& x, const Real& y) {
  // y e^{-y} / e^{-x} - 1 = exp(x - y + ln y) - 1
  return abs(expm1(x - y + log(y)));
}

Real lambert_wm1_numeric(const Real& x, const SolverConfig& cfg) {
  if (!(x > 1)) throw DomainError("lambert_wm1_numeric: x must exceed 1");
  auto f = [&](const Real& y) { return y - log(y) - x; };
  Real lo = 1, hi = 2 * x;
  Real y = x + log(x);
  if (!(y > lo && y < hi)) y = (lo + hi) / 2;
  const Real eps = 8 * std::numeric_limits<Real>::epsilon();
  for (int it = 0; it < std::max(cfg.max_fixed_point_iter, 400); ++it) {
    const Real fy = f(y);
    if (fy == 0) return y;
    if (fy < 0) lo = y; else hi = y;
    const Real d = 1 - 1 / y;
    Real next = d > 0 ? Real(y - fy / d) : Real((lo + hi) / 2);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (abs(next - y) <= eps * y || hi - lo <= eps * hi) return next;
    y = next;
  }
  throw ConvergenceError("lambert_wm1_numeric: no convergence for x = " + format_real(x));
}

}  // namespace hasym
