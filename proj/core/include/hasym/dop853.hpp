#pragma once

// Dormand-Prince 8(5,3) embedded Runge-Kutta pair with the 7th-order
// continuous extension, after Hairer & Wanner's DOP853, templated on the
// state dimension and carried out in binary128.
//
// The tableau constants are the 30-digit values of the reference code; their
// truncation perturbs the order conditions at the 1e-30 level only.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "hasym/errors.hpp"
#include "hasym/real.hpp"

namespace hasym::ode {

template <std::size_t N>
using State = std::array<Real, N>;

struct Dop853Options {
  Real rel_tol = Real(1e-10);
  Real abs_tol = Real(1e-12);
  long max_steps = 20'000'000;
  /// 0 means unbounded (limited only by the interval length).
  Real max_step = 0;
  bool dense = true;
};

struct Dop853Stats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
};

/// Continuous extension over one accepted step [t_old, t_old + h].
template <std::size_t N>
struct DenseSegment {
  Real t_old = 0;
  Real h = 0;
  std::array<State<N>, 8> rc{};

  State<N> eval(const Real& t) const {
    const Real s = (t - t_old) / h;
    const Real s1 = 1 - s;
    State<N> y;
    for (std::size_t i = 0; i < N; ++i) {
      y[i] = rc[0][i] +
             s * (rc[1][i] +
                  s1 * (rc[2][i] +
                        s * (rc[3][i] + s1 * (rc[4][i] + s * (rc[5][i] + s1 * (rc[6][i] + s * rc[7][i]))))));
    }
    return y;
  }
};

/// Data handed to the observer after every accepted step.
template <std::size_t N>
struct AcceptedStep {
  Real t;
  const State<N>& y;
  const State<N>& dydt;
  /// Per-component absolute estimate of the local error of this step.
  const State<N>& local_error;
  /// Valid only when Dop853Options::dense is set.
  const DenseSegment<N>& segment;
};

namespace detail {

struct Dop853Tableau {
  Real c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c14, c15, c16;
  Real b1, b6, b7, b8, b9, b10, b11, b12;
  Real bhh1, bhh2, bhh3;
  Real er1, er6, er7, er8, er9, er10, er11, er12;
  Real a21, a31, a32, a41, a43, a51, a53, a54, a61, a64, a65, a71, a74, a75, a76;
  Real a81, a84, a85, a86, a87, a91, a94, a95, a96, a97, a98;
  Real a101, a104, a105, a106, a107, a108, a109;
  Real a111, a114, a115, a116, a117, a118, a119, a1110;
  Real a121, a124, a125, a126, a127, a128, a129, a1210, a1211;
  Real a141, a147, a148, a149, a1410, a1411, a1412, a1413;
  Real a151, a156, a157, a158, a1511, a1512, a1513, a1514;
  Real a161, a166, a167, a168, a169, a1613, a1614, a1615;
  Real d41, d46, d47, d48, d49, d410, d411, d412, d413, d414, d415, d416;
  Real d51, d56, d57, d58, d59, d510, d511, d512, d513, d514, d515, d516;
  Real d61, d66, d67, d68, d69, d610, d611, d612, d613, d614, d615, d616;
  Real d71, d76, d77, d78, d79, d710, d711, d712, d713, d714, d715, d716;

  Dop853Tableau();
};

const Dop853Tableau& dop853_tableau();

}  // namespace detail

/// Integrates y' = rhs(t, y) from (t0, y0) towards t_end.
///
/// `stops` (sorted in the direction of integration) are landed on exactly.
/// The observer is invoked after every accepted step and returns false to
/// stop early. Non-finite stage values count as a failed step and shrink the
/// step size. Throws IntegrationError on step-size collapse or when the step
/// budget is exhausted.
template <std::size_t N, class Rhs, class Observer>
Dop853Stats dop853_integrate(Rhs&& rhs, Real t0, State<N> y0, Real t_end, std::span<const Real> stops,
                             const Dop853Options& opt, Observer&& observer) {
  const auto& T = detail::dop853_tableau();
  Dop853Stats stats;
  if (t_end == t0) return stats;

  const Real dir = t_end > t0 ? Real(1) : Real(-1);
  const Real uround = std::numeric_limits<Real>::epsilon();
  const Real hmax = opt.max_step > 0 ? std::min(opt.max_step, Real(abs(t_end - t0))) : Real(abs(t_end - t0));
  constexpr double safe = 0.9, facc1 = 1.0 / 0.333, facc2 = 1.0 / 6.0, expo1 = 1.0 / 8.0;

  auto call = [&](const Real& t, const State<N>& y, State<N>& out) {
    rhs(t, y, out);
    ++stats.evaluations;
  };
  auto weight = [&](const Real& a, const Real& b) {
    return opt.abs_tol + opt.rel_tol * std::max(Real(abs(a)), Real(abs(b)));
  };

  Real t = t0;
  State<N> y = y0;
  State<N> k1, k2, k3, k4, k5, k6, k7, k8, k9, k10, k11, k12, k13, k14, k15, k16, ys, ynew;
  call(t, y, k1);

  // Initial step guess.
  Real h;
  {
    Real dnf = 0, dny = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const Real sk = opt.abs_tol + opt.rel_tol * abs(y[i]);
      dnf += (k1[i] / sk) * (k1[i] / sk);
      dny += (y[i] / sk) * (y[i] / sk);
    }
    h = (dnf <= Real(1e-10) || dny <= Real(1e-10)) ? Real(1e-6) : Real(sqrt(dny / dnf) * Real(0.01));
    h = std::min(h, hmax) * dir;
    for (std::size_t i = 0; i < N; ++i) ys[i] = y[i] + h * k1[i];
    call(t + h, ys, k2);
    Real der2 = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const Real sk = opt.abs_tol + opt.rel_tol * abs(y[i]);
      der2 += ((k2[i] - k1[i]) / sk) * ((k2[i] - k1[i]) / sk);
    }
    der2 = sqrt(der2) / abs(h);
    const Real der12 = std::max(Real(abs(der2)), Real(sqrt(dnf)));
    const Real h1 = der12 <= Real(1e-15) ? std::max(Real(1e-6), Real(abs(h) * Real(1e-3)))
                                         : Real(pow(Real(0.01) / der12, Real(1) / 8));
    h = std::min({Real(100 * abs(h)), h1, hmax}) * dir;
  }

  std::size_t next_stop = 0;
  while (next_stop < stops.size() && (stops[next_stop] - t) * dir <= 0) ++next_stop;

  bool reject = false;
  DenseSegment<N> seg;
  State<N> local_err;

  for (;;) {
    if (stats.accepted + stats.rejected >= opt.max_steps) {
      throw IntegrationError("DOP853: step budget exhausted at t = " + format_real(t));
    }
    if (Real(0.1) * abs(h) <= abs(t) * uround) {
      throw IntegrationError("DOP853: step size collapsed at t = " + format_real(t));
    }
    bool last = false;
    Real target = t_end;
    if (next_stop < stops.size() && (stops[next_stop] - t_end) * dir < 0) target = stops[next_stop];
    if ((t + Real(1.01) * h - target) * dir > 0) {
      h = target - t;
      last = true;
    }

    for (std::size_t i = 0; i < N; ++i) ys[i] = y[i] + h * T.a21 * k1[i];
    call(t + T.c2 * h, ys, k2);
    for (std::size_t i = 0; i < N; ++i) ys[i] = y[i] + h * (T.a31 * k1[i] + T.a32 * k2[i]);
    call(t + T.c3 * h, ys, k3);
    for (std::size_t i = 0; i < N; ++i) ys[i] = y[i] + h * (T.a41 * k1[i] + T.a43 * k3[i]);
    call(t + T.c4 * h, ys, k4);
    for (std::size_t i = 0; i < N; ++i) ys[i] = y[i] + h * (T.a51 * k1[i] + T.a53 * k3[i] + T.a54 * k4[i]);
    call(t + T.c5 * h, ys, k5);
    for (std::size_t i = 0; i < N; ++i) ys[i] = y[i] + h * (T.a61 * k1[i] + T.a64 * k4[i] + T.a65 * k5[i]);
    call(t + T.c6 * h, ys, k6);
    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y[i] + h * (T.a71 * k1[i] + T.a74 * k4[i] + T.a75 * k5[i] + T.a76 * k6[i]);
    call(t + T.c7 * h, ys, k7);
    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y[i] + h * (T.a81 * k1[i] + T.a84 * k4[i] + T.a85 * k5[i] + T.a86 * k6[i] + T.a87 * k7[i]);
    call(t + T.c8 * h, ys, k8);
    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y[i] + h * (T.a91 * k1[i] + T.a94 * k4[i] + T.a95 * k5[i] + T.a96 * k6[i] + T.a97 * k7[i] +
                          T.a98 * k8[i]);
    call(t + T.c9 * h, ys, k9);
    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y[i] + h * (T.a101 * k1[i] + T.a104 * k4[i] + T.a105 * k5[i] + T.a106 * k6[i] +
                          T.a107 * k7[i] + T.a108 * k8[i] + T.a109 * k9[i]);
    call(t + T.c10 * h, ys, k10);
    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y[i] + h * (T.a111 * k1[i] + T.a114 * k4[i] + T.a115 * k5[i] + T.a116 * k6[i] +
                          T.a117 * k7[i] + T.a118 * k8[i] + T.a119 * k9[i] + T.a1110 * k10[i]);
    call(t + T.c11 * h, ys, k11);
    const Real tph = t + h;
    for (std::size_t i = 0; i < N; ++i)
      ys[i] = y[i] + h * (T.a121 * k1[i] + T.a124 * k4[i] + T.a125 * k5[i] + T.a126 * k6[i] +
                          T.a127 * k7[i] + T.a128 * k8[i] + T.a129 * k9[i] + T.a1210 * k10[i] +
                          T.a1211 * k11[i]);
    call(tph, ys, k12);

    State<N> incr;  // sum b_i k_i
    for (std::size_t i = 0; i < N; ++i) {
      incr[i] = T.b1 * k1[i] + T.b6 * k6[i] + T.b7 * k7[i] + T.b8 * k8[i] + T.b9 * k9[i] + T.b10 * k10[i] +
                T.b11 * k11[i] + T.b12 * k12[i];
      ynew[i] = y[i] + h * incr[i];
    }

    // Error estimate: 5th-order estimate damped by the 3rd-order one.
    Real err = 0, err2 = 0;
    bool finite = true;
    State<N> e5, e3;
    for (std::size_t i = 0; i < N; ++i) {
      e3[i] = incr[i] - T.bhh1 * k1[i] - T.bhh2 * k9[i] - T.bhh3 * k12[i];
      e5[i] = T.er1 * k1[i] + T.er6 * k6[i] + T.er7 * k7[i] + T.er8 * k8[i] + T.er9 * k9[i] + T.er10 * k10[i] +
              T.er11 * k11[i] + T.er12 * k12[i];
      const Real sk = weight(y[i], ynew[i]);
      err2 += (e3[i] / sk) * (e3[i] / sk);
      err += (e5[i] / sk) * (e5[i] / sk);
      if (!isfinite(ynew[i]) || !isfinite(e5[i]) || !isfinite(e3[i])) finite = false;
    }
    Real deno = err + Real(0.01) * err2;
    if (deno <= 0) deno = 1;
    err = abs(h) * err * sqrt(Real(1) / (deno * Real(N)));
    if (!finite || !isfinite(err)) {
      ++stats.rejected;
      h /= facc1;
      reject = true;
      continue;
    }

    const double errd = to_double(err);
    const double fac11 = std::pow(errd, expo1);
    double fac = std::max(facc2, std::min(facc1, fac11 / safe));
    Real hnew = h / fac;

    if (errd > 1.0) {
      ++stats.rejected;
      hnew = h / std::min(facc1, fac11 / safe);
      reject = true;
      h = hnew;
      continue;
    }

    ++stats.accepted;
    call(tph, ynew, k13);

    for (std::size_t i = 0; i < N; ++i) {
      const Real d = sqrt(e5[i] * e5[i] + Real(0.01) * e3[i] * e3[i]);
      local_err[i] = d > 0 ? Real(abs(h) * e5[i] * e5[i] / d) : Real(0);
    }

    if (opt.dense) {
      seg.t_old = t;
      seg.h = h;
      for (std::size_t i = 0; i < N; ++i) {
        seg.rc[0][i] = y[i];
        const Real ydiff = ynew[i] - y[i];
        seg.rc[1][i] = ydiff;
        const Real bspl = h * k1[i] - ydiff;
        seg.rc[2][i] = bspl;
        seg.rc[3][i] = ydiff - h * k13[i] - bspl;
        seg.rc[4][i] = T.d41 * k1[i] + T.d46 * k6[i] + T.d47 * k7[i] + T.d48 * k8[i] + T.d49 * k9[i] +
                       T.d410 * k10[i] + T.d411 * k11[i] + T.d412 * k12[i];
        seg.rc[5][i] = T.d51 * k1[i] + T.d56 * k6[i] + T.d57 * k7[i] + T.d58 * k8[i] + T.d59 * k9[i] +
                       T.d510 * k10[i] + T.d511 * k11[i] + T.d512 * k12[i];
        seg.rc[6][i] = T.d61 * k1[i] + T.d66 * k6[i] + T.d67 * k7[i] + T.d68 * k8[i] + T.d69 * k9[i] +
                       T.d610 * k10[i] + T.d611 * k11[i] + T.d612 * k12[i];
        seg.rc[7][i] = T.d71 * k1[i] + T.d76 * k6[i] + T.d77 * k7[i] + T.d78 * k8[i] + T.d79 * k9[i] +
                       T.d710 * k10[i] + T.d711 * k11[i] + T.d712 * k12[i];
      }
      for (std::size_t i = 0; i < N; ++i)
        ys[i] = y[i] + h * (T.a141 * k1[i] + T.a147 * k7[i] + T.a148 * k8[i] + T.a149 * k9[i] +
                            T.a1410 * k10[i] + T.a1411 * k11[i] + T.a1412 * k12[i] + T.a1413 * k13[i]);
      call(t + T.c14 * h, ys, k14);
      for (std::size_t i = 0; i < N; ++i)
        ys[i] = y[i] + h * (T.a151 * k1[i] + T.a156 * k6[i] + T.a157 * k7[i] + T.a158 * k8[i] +
                            T.a1511 * k11[i] + T.a1512 * k12[i] + T.a1513 * k13[i] + T.a1514 * k14[i]);
      call(t + T.c15 * h, ys, k15);
      for (std::size_t i = 0; i < N; ++i)
        ys[i] = y[i] + h * (T.a161 * k1[i] + T.a166 * k6[i] + T.a167 * k7[i] + T.a168 * k8[i] +
                            T.a169 * k9[i] + T.a1613 * k13[i] + T.a1614 * k14[i] + T.a1615 * k15[i]);
      call(t + T.c16 * h, ys, k16);
      for (std::size_t i = 0; i < N; ++i) {
        seg.rc[4][i] = h * (seg.rc[4][i] + T.d413 * k13[i] + T.d414 * k14[i] + T.d415 * k15[i] + T.d416 * k16[i]);
        seg.rc[5][i] = h * (seg.rc[5][i] + T.d513 * k13[i] + T.d514 * k14[i] + T.d515 * k15[i] + T.d516 * k16[i]);
        seg.rc[6][i] = h * (seg.rc[6][i] + T.d613 * k13[i] + T.d614 * k14[i] + T.d615 * k15[i] + T.d616 * k16[i]);
        seg.rc[7][i] = h * (seg.rc[7][i] + T.d713 * k13[i] + T.d714 * k14[i] + T.d715 * k15[i] + T.d716 * k16[i]);
      }
    }

    k1 = k13;
    y = ynew;
    t = last ? target : tph;
    if (last && target != t_end) ++next_stop;

    const bool keep_going = observer(AcceptedStep<N>{t, y, k1, local_err, seg});
    if (!keep_going || (last && target == t_end)) break;

    if (abs(hnew) > hmax) hnew = dir * hmax;
    if (reject) hnew = dir * std::min(Real(abs(hnew)), Real(abs(h)));
    reject = false;
    h = hnew;
  }
  return stats;
}

}  // namespace hasym::ode
