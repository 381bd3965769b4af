#include <catch_amalgamated.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hasym/errors.hpp"
#include "hasym/numerics.hpp"

using namespace hasym;

namespace {

const GProblem& reference_problem() {
  static const GProblem p = solve_g(InitialData{0, 1, 1}, SolverConfig::high_accuracy());
  return p;
}

Real gk(const std::function<Real(Real)>& f, const Real& a, const Real& b) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<Real, 61>::integrate(f, a, b, 15, Real(1e-26));
}

}  // namespace

TEST_CASE("configuration and data validation", "[numerics]") {
  CHECK_THROWS_AS((InitialData{0, 0, 1}.validate()), DomainError);
  CHECK_THROWS_AS((InitialData{0, -1, 1}.validate()), DomainError);
  SolverConfig bad;
  bad.rel_tol = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(integrate_h(InitialData{0, 1, 1}, Real(-1)), DomainError);
  CHECK_THROWS_AS(solve_g(Real(-1), Real(1)), DomainError);
  CHECK_THROWS_AS(solve_g(Real(1), Real(0)), DomainError);
}

TEST_CASE("trajectory stays positive and lands on output times", "[numerics]") {
  IntegrateOptions io;
  io.output_times = {Real(10), Real(100)};
  const auto tr = integrate_h(InitialData{0, 1, 1}, Real(1000), {}, io);
  for (const auto& s : tr.samples()) CHECK(s.h > 0);
  CHECK(tr.at(Real(10)).t == 10);
  CHECK_NOTHROW(tr.at(Real(100)));
  CHECK_THROWS_AS(tr.at(Real(2000)), RangeError);
  CHECK_THROWS_AS(tr.at(Real("10.5")), RangeError);  // no dense output kept
  CHECK(tr.error_estimate(Real(1000)) >= tr.error_estimate(Real(10)));
}

TEST_CASE("step budget exhaustion is reported", "[numerics]") {
  // a hard bounce near h = 0 needs many small steps
  SolverConfig cfg;
  cfg.max_steps = 50;
  CHECK_THROWS_AS(integrate_h(InitialData{0, 1, -30}, Real(100), cfg), IntegrationError);
}

TEST_CASE("dense output agrees with exact stops in both phases", "[numerics]") {
  SolverConfig cfg;
  cfg.rel_tol = Real(1e-20);
  cfg.abs_tol = Real(1e-22);
  IntegrateOptions dense;
  dense.dense = true;
  const auto a = integrate_h(InitialData{0, 1, 1}, Real(300), cfg, dense);
  IntegrateOptions stops;
  stops.output_times = {Real("12.3"), Real("250.7")};
  const auto b = integrate_h(InitialData{0, 1, 1}, Real(300), cfg, stops);
  CHECK(abs(a.at(Real("12.3")).h - b.at(Real("12.3")).h) < Real(1e-17));
  CHECK(abs(a.at(Real("250.7")).h - b.at(Real("250.7")).h) < Real(1e-17));
}

TEST_CASE("implicit phase matches the explicit pair", "[numerics]") {
  SolverConfig explicit_only;
  explicit_only.rel_tol = Real(1e-22);
  explicit_only.abs_tol = Real(1e-24);
  explicit_only.implicit_after = std::numeric_limits<Real>::infinity();
  SolverConfig mixed = explicit_only;
  mixed.implicit_after = 20;
  const auto a = integrate_h(InitialData{0, 1, 1}, Real(200), explicit_only);
  const auto b = integrate_h(InitialData{0, 1, 1}, Real(200), mixed);
  CHECK(abs(a.samples().back().h - b.samples().back().h) < Real(1e-19));
  CHECK(b.stats().accepted < a.stats().accepted);
}

TEST_CASE("radial map satisfies r^3 r'' = t^2", "[numerics]") {
  SolverConfig cfg;
  cfg.rel_tol = Real(1e-24);
  cfg.abs_tol = Real(1e-26);
  IntegrateOptions io;
  io.dense = true;
  const auto tr = integrate_h(InitialData{0, 1, 1}, Real(6), cfg, io);
  for (const Real& t : {Real(2), Real(10), Real(100)}) {
    const Real d = Real(1e-6) * t;
    const auto r = map_to_radial(tr, {t - d, t, t + d});
    const Real r2 = (r[0].second - 2 * r[1].second + r[2].second) / (d * d);
    const Real rr = r[1].second;
    CHECK(abs(rr * rr * rr * r2 / (t * t) - 1) < Real(1e-9));
  }
}

TEST_CASE("reduction identities along a trajectory", "[numerics]") {
  const auto& p = reference_problem();
  SolverConfig cfg;
  cfg.rel_tol = Real(1e-24);
  cfg.abs_tol = Real(1e-26);
  IntegrateOptions io;
  io.output_times = {Real(1), Real(10), Real(100), Real(1000)};
  const auto tr = integrate_h(InitialData{0, 1, 1}, Real(1000), cfg, io);
  for (const auto& t : io.output_times) {
    const auto s = tr.at(t);
    const Real x = pow(s.h, 4);
    // h^3 h' = g(4/h^4) and G(h^4) = 4t
    CHECK(abs(s.h * s.h * s.h * s.hp - p.g(4 / x)) < Real(1e-20));
    CHECK(abs(p.G(x) - 4 * t) < Real(1e-18) * t);
  }
}

TEST_CASE("c agrees with Gauss-Kronrod quadrature of its integrand", "[numerics]") {
  const auto& p = reference_problem();
  const Real x0 = p.x0();
  const Real integral = boost::math::quadrature::gauss_kronrod<Real, 61>::integrate(
      [&](Real s) { return p.c_integrand(s); }, x0, std::numeric_limits<Real>::infinity(), 20, Real(1e-24));
  const Real c_gk = integral - x0 + 3 * log(x0);
  CHECK(abs(c_gk - p.c()) < Real(1e-18));
}

TEST_CASE("G agrees with quadrature of 1/g(4/s)", "[numerics]") {
  const auto& p = reference_problem();
  for (const Real& x : {Real(2), Real(50), Real(1000), Real(20000)}) {
    const Real ref = gk([&](Real s) { return p.G_prime(s); }, p.x0(), x);
    CHECK(abs(compute_G(x, p) - ref) < Real(1e-22) * x);
  }
  CHECK_THROWS_AS(p.G(Real("0.5")), DomainError);
}

TEST_CASE("c is the same for every time along a trajectory", "[numerics]") {
  const auto cfg = SolverConfig::high_accuracy();
  const Real c0 = compute_c(InitialData{0, 1, 1}, cfg).c;
  IntegrateOptions io;
  io.output_times = {Real(3)};
  const auto tr = integrate_h(InitialData{0, 1, 1}, Real(3), cfg, io);
  const auto s = tr.at(Real(3));
  CHECK(abs(compute_c(InitialData{3, s.h, s.hp}, cfg).c - c0) < Real(1e-20));
  // the same data at time 0 carries c - 4 * 3
  CHECK(abs(compute_c(InitialData{0, s.h, s.hp}, cfg).c - (c0 - 12)) < Real(1e-20));
}

TEST_CASE("data with non-positive velocity are shifted before reduction", "[numerics]") {
  const auto info = compute_c(InitialData{0, 1, Real(-2)}, SolverConfig::high_accuracy());
  CHECK(info.tau > 0);
  CHECK(info.hp_tau > 0);
  CHECK(info.h_tau > 0);
  // cross-check from a later point of the same trajectory
  const auto tr = integrate_h(InitialData{0, 1, Real(-2)}, Real(10), SolverConfig::high_accuracy(),
                              IntegrateOptions{{Real(10)}, false, false});
  const auto s = tr.at(Real(10));
  CHECK(abs(compute_c(InitialData{10, s.h, s.hp}, SolverConfig::high_accuracy()).c - info.c) < Real(1e-18));
}

TEST_CASE("G inversion: residual, sandwich and path selection", "[numerics]") {
  const auto& p = reference_problem();
  for (int e = 2; e <= 6; ++e) {
    const Real x = pow(Real(10), e);
    InvertGInfo info;
    const Real y = invert_G(x, p, &info);
    CHECK(abs(p.G(y) - x) < Real(1e-24) * x);
    CHECK(info.fixed_point);
    CHECK(y - x >= 0);
    CHECK(y - x <= x / (x - 4) * (x - p.G(x)));
  }
  InvertGInfo info;
  const Real y = invert_G(Real(2), p, &info);
  CHECK(!info.fixed_point);
  CHECK(abs(p.G(y) - 2) < Real(1e-25));
  CHECK_THROWS_AS(invert_G(Real(-1), p), DomainError);
}

TEST_CASE("invert_G reports a hit iteration cap", "[numerics]") {
  SolverConfig cfg = SolverConfig::high_accuracy();
  cfg.max_fixed_point_iter = 2;
  const auto p = solve_g(InitialData{0, 1, 1}, cfg);
  CHECK_THROWS_AS(invert_G(Real(100), p), ConvergenceError);
}

TEST_CASE("Lambert branch against bisection at x = 10", "[numerics]") {
  const Real x = 10;
  Real lo = 1, hi = 40;
  for (int i = 0; i < 300; ++i) {
    const Real mid = (lo + hi) / 2;
    if (mid - log(mid) - x < 0) lo = mid; else hi = mid;
  }
  const Real y = lambert_wm1_numeric(x);
  CHECK(abs(y - lo) < Real(1e-30));
  CHECK(lambert_relative_residual(x, y) < Real(1e-30));
  CHECK_THROWS_AS(lambert_wm1_numeric(Real(1)), DomainError);
}
