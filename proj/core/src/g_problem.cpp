#include <algorithm>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "hasym/errors.hpp"
#include "hasym/numerics.hpp"
#include "hasym/rational.hpp"
#include "hasym/recursions.hpp"

namespace hasym {

namespace {

constexpr int kMaxTailTerms = 80;
constexpr int kMaxCrossoverRefinements = 24;

struct RealSequences {
  std::vector<Real> alpha;
  std::vector<Real> beta;
};

// alpha_0..alpha_n and beta_0..beta_n rounded to binary128, memoized.
const RealSequences& real_sequences(int n) {
  static std::mutex mu;
  static RealSequences cache;
  std::lock_guard lock(mu);
  if (static_cast<int>(cache.alpha.size()) <= n) {
    const int m = std::max(n, kMaxTailTerms);
    const RationalSeries a = g_series(m);
    const RationalSeries b = series_reciprocal(a);
    cache.alpha.clear();
    cache.beta.clear();
    for (int k = 0; k <= m; ++k) {
      cache.alpha.push_back(to_real(a[k]));
      cache.beta.push_back(to_real(b[k]));
    }
  }
  return cache;
}

Real series_tolerance(const SolverConfig& cfg) {
  return std::min(cfg.rel_tol, cfg.abs_tol) / 100;
}

// Largest z in (0, 1] with |alpha_{M-1} z^{M-1} + alpha_M z^M| < tol whose
// order-M term of the c-tail, 4 beta_M z^{M-1}/(M-1), is also below tol.
Real auto_crossover(const std::vector<Real>& alpha, const std::vector<Real>& beta, int M, const Real& tol) {
  auto ok = [&](const Real& z) {
    return abs(alpha[M - 1] * pow(z, M - 1) + alpha[M] * pow(z, M)) < tol &&
           abs(4 * beta[M] * pow(z, M - 1) / (M - 1)) < tol;
  };
  if (ok(Real(1))) return Real(1);
  Real lo = log(Real(1e-12)), hi = 0;
  for (int i = 0; i < 200 && hi - lo > Real(1e-12); ++i) {
    const Real mid = (lo + hi) / 2;
    if (ok(exp(mid))) lo = mid; else hi = mid;
  }
  return exp(lo);
}

}  // namespace

Real GProblem::series_g(const Real& z) const {
  Real acc = 0;
  for (std::size_t k = alpha_.size(); k-- > 0;) acc = acc * z + alpha_[k];
  return acc;
}

Real GProblem::series_recip_tail(const Real& z) const {
  Real acc = 0;
  for (int k = tail_terms_; k >= 2; --k) acc = acc * z + beta_[static_cast<std::size_t>(k)];
  return acc * z * z;
}

Real GProblem::tail_integral(const Real& z) const {
  Real acc = 0;
  for (int k = tail_terms_; k >= 2; --k) acc = acc * z + 4 * beta_[static_cast<std::size_t>(k)] / (k - 1);
  return acc * z;
}

std::size_t GProblem::find_segment(const Real& z) const {
  // segments run downward: segment i covers [t_old + h, t_old] with h < 0
  auto it = std::partition_point(segments_.begin(), segments_.end(),
                                 [&](const ode::DenseSegment<3>& s) { return s.t_old + s.h > z; });
  if (it == segments_.end()) --it;
  return static_cast<std::size_t>(std::distance(segments_.begin(), it));
}

Real GProblem::g(const Real& z) const {
  if (!(z > 0) || z > z0_) throw DomainError("g is represented on (0, z0] only; z = " + format_real(z));
  if (z < zc_) return series_g(z);
  return segments_[find_segment(z)].eval(z)[0];
}

Real GProblem::G(const Real& x) const {
  const Real lower = x0();
  if (x < lower) throw DomainError("G(x) needs x >= h0^4 = " + format_real(lower));
  Real z = 4 / x;
  if (z > z0_) z = z0_;
  if (z >= zc_) return segments_[find_segment(z)].eval(z)[2];
  const Real S = split_point();
  return J_c_ + (x - S) - 3 * log(x / S) + tail_integral(zc_) - tail_integral(z);
}

Real GProblem::G_prime(const Real& x) const {
  if (x < x0()) throw DomainError("G'(x) needs x >= h0^4");
  Real z = 4 / x;
  if (z > z0_) z = z0_;
  return 1 / g(z);
}

Real GProblem::c_integrand(const Real& s) const {
  if (s < x0()) throw DomainError("c-integrand needs s >= h0^4");
  Real z = 4 / s;
  if (z > z0_) z = z0_;
  if (z < zc_) return series_recip_tail(z);
  return 1 / g(z) - 1 + Real(3) / 4 * z;
}

std::string GProblem::summary_json() const {
  nlohmann::ordered_json j;
  j["z0"] = format_real(z0_);
  j["g0"] = format_real(g0_);
  j["c"] = format_real(c_);
  j["z_c"] = format_real(zc_);
  j["S"] = format_real(split_point());
  j["rel_tol"] = format_real(cfg_.rel_tol, 3);
  j["abs_tol"] = format_real(cfg_.abs_tol, 3);
  j["series_order"] = cfg_.series_order;
  j["tail_terms"] = tail_terms_;
  j["steps"] = stats_.accepted;
  j["rejected"] = stats_.rejected;
  return j.dump(2);
}

GProblem solve_g(const Real& z0, const Real& g0, const SolverConfig& cfg) {
  cfg.validate();
  if (!(z0 > 0) || !isfinite(z0)) throw DomainError("solve_g: z0 must be positive");
  if (!(g0 > 0) || !isfinite(g0)) throw DomainError("solve_g: g0 must be positive");

  GProblem p;
  p.z0_ = z0;
  p.g0_ = g0;
  p.cfg_ = cfg;
  const int M = cfg.series_order;
  const auto& seq = real_sequences(std::max(M, kMaxTailTerms));
  p.alpha_.assign(seq.alpha.begin(), seq.alpha.begin() + M + 1);
  p.beta_.assign(seq.beta.begin(), seq.beta.begin() + std::max(M, kMaxTailTerms) + 1);

  const Real tol = series_tolerance(cfg);
  Real zc = cfg.tail_split > 0 ? Real(4 / cfg.tail_split) : auto_crossover(p.alpha_, p.beta_, M, tol);
  zc = std::min(zc, z0 / 2);

  ode::Dop853Options opt;
  opt.rel_tol = cfg.rel_tol;
  opt.abs_tol = cfg.abs_tol;
  opt.max_steps = cfg.max_steps;
  opt.dense = true;

  auto rhs = [](const Real& z, const ode::State<3>& s, ode::State<3>& out) {
    const Real inv_g = 1 / s[0];
    const Real inv_z2 = 1 / (z * z);
    out[0] = (1 - inv_g) * inv_z2 - Real(3) / 4 * s[0] / z;
    out[1] = -4 * (inv_g - 1 + Real(3) / 4 * z) * inv_z2;
    out[2] = -4 * inv_g * inv_z2;
  };
  auto observer = [&](const ode::AcceptedStep<3>& step) {
    if (!(step.y[0] > 0)) throw DomainError("g lost positivity at z = " + format_real(step.t));
    p.segments_.push_back(step.segment);
    return true;
  };

  // Integrate down to the crossover; if the numerical g has not yet merged
  // with the series there, keep going where the series is more accurate.
  const Real agree = 100 * (cfg.rel_tol + cfg.abs_tol);
  Real z = z0;
  ode::State<3> state{g0, 0, 0};
  bool merged = false;
  for (int attempt = 0; attempt <= kMaxCrossoverRefinements; ++attempt) {
    const auto st = ode::dop853_integrate<3>(rhs, z, state, zc, {}, opt, observer);
    p.stats_.accepted += st.accepted;
    p.stats_.rejected += st.rejected;
    p.stats_.evaluations += st.evaluations;
    state = p.segments_.empty() ? state : p.segments_.back().eval(zc);
    // the last step ends exactly at zc; take the stored end state
    z = zc;
    p.zc_ = zc;
    if (abs(state[0] - p.series_g(zc)) <= agree) {
      merged = true;
      break;
    }
    zc /= 2;
  }
  if (!merged) {
    throw AccuracyError("solve_g: integrated g does not merge with the small-z series (z_c = " +
                        format_real(p.zc_) + ")");
  }
  p.I_c_ = state[1];
  p.J_c_ = state[2];

  // Tail of the c-integral beyond S = 4/z_c.
  int k_used = 0;
  Real prev = 0;
  for (int k = 2; k <= kMaxTailTerms; ++k) {
    const Real term = abs(4 * p.beta_[static_cast<std::size_t>(k)] * pow(p.zc_, k - 1) / (k - 1));
    if (term < tol) {
      k_used = k;
      break;
    }
    if (k > 6 && term > prev) break;  // terms growing: the asymptotic tail diverges here
    prev = term;
  }
  if (k_used == 0) {
    throw AccuracyError("tail of the c-integral not converged at S = " + format_real(p.split_point()) +
                        "; use a larger split point or looser tolerances");
  }
  p.tail_terms_ = k_used;

  const Real x0 = 4 / z0;
  p.c_ = p.I_c_ + p.tail_integral(p.zc_) - x0 + 3 * log(x0);
  return p;
}

GProblem solve_g(const InitialData& data, const SolverConfig& cfg) {
  data.validate();
  if (!(data.h1 > 0)) throw DomainError("the reduction to g needs h1 > 0");
  const Real h2 = data.h0 * data.h0;
  return solve_g(4 / (h2 * h2), h2 * data.h0 * data.h1, cfg);
}

Real compute_G(const Real& x, const GProblem& problem) { return problem.G(x); }

Real compute_c(const GProblem& problem) { return problem.c(); }

CConstantInfo compute_c(const InitialData& data, const SolverConfig& cfg) {
  data.validate();
  CConstantInfo info;
  if (data.h1 > 0) {
    info.tau = data.t0;
    info.h_tau = data.h0;
    info.hp_tau = data.h1;
  } else {
    // Advance until h' > 0, then a unit of time further.
    Real span = 8;
    for (;;) {
      IntegrateOptions io;
      io.dense = true;
      const Trajectory traj = integrate_h(data, data.t0 + span, cfg, io);
      auto it = std::find_if(traj.samples().begin(), traj.samples().end(),
                             [](const TrajectorySample& s) { return s.hp > 0; });
      if (it != traj.samples().end() && it->t + 1 <= traj.t_end()) {
        const auto s = traj.at(it->t + 1);
        info.tau = s.t;
        info.h_tau = s.h;
        info.hp_tau = s.hp;
        break;
      }
      span *= 2;
      if (span > Real(1e6)) throw IntegrationError("h' did not become positive");
    }
  }
  const GProblem p = solve_g(InitialData{0, info.h_tau, info.hp_tau}, cfg);
  info.c = p.c() + 4 * info.tau;
  return info;
}

Real invert_G(const Real& x, const GProblem& problem, InvertGInfo* info) {
  if (!(x >= 0) || !isfinite(x)) throw DomainError("invert_G: x must be a finite non-negative value");
  const SolverConfig& cfg = problem.config();
  const Real x0 = problem.x0();
  InvertGInfo local;
  InvertGInfo& inf = info ? *info : local;
  inf = {};
  if (x == 0) return x0;

  const Real eps = std::numeric_limits<Real>::epsilon();
  auto tolerance = [&](const Real& y) { return std::max(cfg.fixed_point_tol, 64 * eps * y); };

  if (x > 4 && x >= x0) {
    inf.fixed_point = true;
    const Real bound = 4 / x;
    Real y = x;
    Real d_prev = 0;
    bool contraction = true;
    for (int n = 0; n < cfg.max_fixed_point_iter; ++n) {
      const Real next = x + y - problem.G(y);
      const Real d = next - y;
      ++inf.iterations;
      if (d < -tolerance(y) || next < x0) {
        contraction = false;
        break;
      }
      if (d_prev > 1000 * tolerance(y)) {
        const Real ratio = d / d_prev;
        inf.max_ratio = std::max(inf.max_ratio, ratio);
        if (ratio > bound) {
          contraction = false;
          break;
        }
      }
      y = next;
      if (abs(d) <= tolerance(y)) return y;
      d_prev = d;
    }
    if (contraction) {
      throw ConvergenceError("invert_G: fixed-point iteration cap reached at x = " + format_real(x));
    }
    inf.fixed_point = false;
  }

  // Safeguarded Newton-bisection on [lo, hi] with G(lo) <= x <= G(hi).
  Real lo = x0, hi = std::max(2 * x, x0 + 1);
  while (problem.G(hi) < x) {
    hi = 2 * hi - x0;
    if (!isfinite(hi)) throw ConvergenceError("invert_G: cannot bracket x = " + format_real(x));
  }
  Real y = (lo + hi) / 2;
  for (int n = 0; n < 4 * cfg.max_fixed_point_iter; ++n) {
    ++inf.iterations;
    const Real r = problem.G(y) - x;
    if (r < 0) lo = y; else hi = y;
    Real next = y - r / problem.G_prime(y);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (abs(next - y) <= tolerance(y) || hi - lo <= tolerance(y)) return next;
    y = next;
  }
  throw ConvergenceError("invert_G: Newton-bisection did not converge at x = " + format_real(x));
}

}  // namespace hasym
