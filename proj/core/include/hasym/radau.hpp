#pragma once

// Five-stage Radau IIA collocation (order 9, L-stable, stiffly accurate) with
// step-doubling error control, in binary128.
//
// Used for the long, slowly varying phase of the h-trajectory, where an
// explicit pair is held back by the damped mode y' ~ -y: the local error of
// the explicit scheme there is dominated by (dt lambda)^8 dt p' terms rather
// than by high derivatives of the solution.

#include <array>
#include <cstddef>
#include <span>
#include <string>

#include "hasym/dop853.hpp"
#include "hasym/errors.hpp"
#include "hasym/real.hpp"

namespace hasym::ode {

inline constexpr std::size_t kRadauStages = 5;

struct RadauCoefficients {
  std::array<Real, kRadauStages> c{};
  std::array<std::array<Real, kRadauStages>, kRadauStages> a{};
};

/// Nodes are the zeros of d^{s-1}/dx^{s-1} [x^{s-1} (x-1)^s] on (0, 1];
/// a_ij = int_0^{c_i} l_j, computed once in binary128.
const RadauCoefficients& radau_coefficients();

/// Collocation polynomial over [t_old, t_old + h] through the step start and
/// the five stage values.
template <std::size_t N>
struct CollocationSegment {
  Real t_old = 0;
  Real h = 0;
  std::array<State<N>, kRadauStages + 1> nodes{};  // at s = 0, c_1..c_5

  State<N> eval(const Real& t) const {
    const auto& rc = radau_coefficients();
    const Real s = (t - t_old) / h;
    std::array<Real, kRadauStages + 1> xs{};
    xs[0] = 0;
    for (std::size_t i = 0; i < kRadauStages; ++i) xs[i + 1] = rc.c[i];
    State<N> y{};
    for (std::size_t j = 0; j <= kRadauStages; ++j) {
      Real w = 1;
      for (std::size_t m = 0; m <= kRadauStages; ++m) {
        if (m != j) w *= (s - xs[m]) / (xs[j] - xs[m]);
      }
      for (std::size_t i = 0; i < N; ++i) y[i] += w * nodes[j][i];
    }
    return y;
  }
};

struct RadauOptions {
  Real rel_tol = Real(1e-10);
  Real abs_tol = Real(1e-12);
  long max_steps = 20'000'000;
  Real initial_step = 0;  // 0: a small multiple of the interval
  int max_newton = 12;
};

template <std::size_t N>
struct RadauAccepted {
  Real t;
  const State<N>& y;
  /// Per-component estimate of the local error of this step.
  const State<N>& local_error;
  /// The step is returned as its two halves.
  const CollocationSegment<N>& first_half;
  const CollocationSegment<N>& second_half;
};

namespace detail {

/// Dense LU solve in place; returns false when singular.
template <std::size_t M>
bool lu_solve(std::array<std::array<Real, M>, M> m, std::array<Real, M>& rhs) {
  for (std::size_t k = 0; k < M; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < M; ++i) {
      if (abs(m[i][k]) > abs(m[piv][k])) piv = i;
    }
    if (m[piv][k] == 0) return false;
    std::swap(m[piv], m[k]);
    std::swap(rhs[piv], rhs[k]);
    for (std::size_t i = k + 1; i < M; ++i) {
      const Real f = m[i][k] / m[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < M; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  for (std::size_t k = M; k-- > 0;) {
    Real acc = rhs[k];
    for (std::size_t j = k + 1; j < M; ++j) acc -= m[k][j] * rhs[j];
    rhs[k] = acc / m[k][k];
  }
  return true;
}

/// One collocation step of size h from (t, y). Returns false when the
/// simplified Newton iteration fails to converge.
template <std::size_t N, class Rhs, class Jac>
bool radau_step(Rhs& rhs, Jac& jac, const Real& t, const State<N>& y, const Real& h, int max_newton,
                State<N>& y_new, CollocationSegment<N>& seg, long& evaluations) {
  constexpr std::size_t S = kRadauStages;
  constexpr std::size_t M = S * N;
  const auto& rc = radau_coefficients();

  std::array<std::array<Real, N>, N> J{};
  jac(t, y, J);
  std::array<std::array<Real, M>, M> mat{};
  for (std::size_t i = 0; i < S; ++i) {
    for (std::size_t j = 0; j < S; ++j) {
      for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = 0; q < N; ++q) {
          mat[i * N + p][j * N + q] = (i == j && p == q ? Real(1) : Real(0)) - h * rc.a[i][j] * J[p][q];
        }
      }
    }
  }

  State<N> f0;
  rhs(t, y, f0);
  ++evaluations;
  std::array<State<N>, S> z{};
  for (std::size_t i = 0; i < S; ++i) {
    for (std::size_t p = 0; p < N; ++p) z[i][p] = rc.c[i] * h * f0[p];
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  Real prev_norm = std::numeric_limits<Real>::infinity();
  for (int it = 0; it < max_newton; ++it) {
    std::array<State<N>, S> fz;
    for (std::size_t i = 0; i < S; ++i) {
      State<N> yi;
      for (std::size_t p = 0; p < N; ++p) yi[p] = y[p] + z[i][p];
      rhs(t + rc.c[i] * h, yi, fz[i]);
      ++evaluations;
      for (std::size_t p = 0; p < N; ++p) {
        if (!isfinite(fz[i][p])) return false;
      }
    }
    std::array<Real, M> g;
    for (std::size_t i = 0; i < S; ++i) {
      for (std::size_t p = 0; p < N; ++p) {
        Real acc = 0;
        for (std::size_t j = 0; j < S; ++j) acc += rc.a[i][j] * fz[j][p];
        g[i * N + p] = -(z[i][p] - h * acc);
      }
    }
    if (!lu_solve<M>(mat, g)) return false;
    Real norm = 0, scale = 0;
    for (std::size_t i = 0; i < S; ++i) {
      for (std::size_t p = 0; p < N; ++p) {
        z[i][p] += g[i * N + p];
        norm = std::max(norm, Real(abs(g[i * N + p])));
        scale = std::max(scale, Real(abs(y[p]) + abs(z[i][p])));
      }
    }
    if (norm <= 16 * eps * scale) break;
    if (it > 1 && norm > prev_norm / 2) {
      // slow or no contraction: accept only if already at rounding level
      if (norm > 1024 * eps * scale) return false;
      break;
    }
    prev_norm = norm;
    if (it == max_newton - 1) return false;
  }

  for (std::size_t p = 0; p < N; ++p) y_new[p] = y[p] + z[S - 1][p];
  seg.t_old = t;
  seg.h = h;
  seg.nodes[0] = y;
  for (std::size_t i = 0; i < S; ++i) {
    for (std::size_t p = 0; p < N; ++p) seg.nodes[i + 1][p] = y[p] + z[i][p];
  }
  return true;
}

}  // namespace detail

/// Integrates y' = rhs(t, y) forward from t0 to t_end, landing on `stops`
/// exactly. jac(t, y, J) fills the Jacobian. Every step of size h is
/// compared with two steps of size h/2; the halves are kept.
template <std::size_t N, class Rhs, class Jac, class Observer>
Dop853Stats radau_integrate(Rhs&& rhs, Jac&& jac, Real t0, State<N> y0, Real t_end, std::span<const Real> stops,
                            const RadauOptions& opt, Observer&& observer) {
  Dop853Stats stats;
  if (!(t_end > t0)) return stats;
  // error of the halved steps relative to the full step, order 9
  const Real richardson = Real(511);
  Real t = t0;
  State<N> y = y0;
  Real h = opt.initial_step > 0 ? opt.initial_step : Real((t_end - t0) * Real(1e-3));
  std::size_t next_stop = 0;
  while (next_stop < stops.size() && stops[next_stop] <= t) ++next_stop;

  CollocationSegment<N> full_seg, seg1, seg2;
  State<N> y_full, y_mid, y_half, local_err;
  for (;;) {
    if (stats.accepted + stats.rejected >= opt.max_steps) {
      throw IntegrationError("Radau IIA: step budget exhausted at t = " + format_real(t));
    }
    if (h <= abs(t) * 16 * std::numeric_limits<Real>::epsilon()) {
      throw IntegrationError("Radau IIA: step size collapsed at t = " + format_real(t));
    }
    Real target = t_end;
    if (next_stop < stops.size() && stops[next_stop] < t_end) target = stops[next_stop];
    bool last = false;
    if (t + Real(1.01) * h >= target) {
      h = target - t;
      last = true;
    }

    const Real half = h / 2;
    const bool ok = detail::radau_step<N>(rhs, jac, t, y, h, opt.max_newton, y_full, full_seg, stats.evaluations) &&
                    detail::radau_step<N>(rhs, jac, t, y, half, opt.max_newton, y_mid, seg1, stats.evaluations) &&
                    detail::radau_step<N>(rhs, jac, t + half, y_mid, h - half, opt.max_newton, y_half, seg2,
                                          stats.evaluations);
    if (!ok) {
      ++stats.rejected;
      h /= 4;
      continue;
    }
    Real err = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const Real sk = opt.abs_tol + opt.rel_tol * std::max(Real(abs(y[i])), Real(abs(y_half[i])));
      local_err[i] = abs(y_half[i] - y_full[i]) / richardson;
      err += (local_err[i] / sk) * (local_err[i] / sk);
    }
    err = sqrt(err / Real(N));
    const double errd = to_double(err);
    const double fac = errd > 0 ? std::min(4.0, std::max(0.2, 0.9 * std::pow(errd, -0.1))) : 4.0;
    if (errd > 1.0) {
      ++stats.rejected;
      h *= std::min(fac, 0.5);
      continue;
    }
    ++stats.accepted;
    t = last ? target : t + h;
    y = y_half;
    if (last && target != t_end) ++next_stop;
    const bool keep_going = observer(RadauAccepted<N>{t, y, local_err, seg1, seg2});
    if (!keep_going || (last && target == t_end)) break;
    h *= fac;
  }
  return stats;
}

}  // namespace hasym::ode
