#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "hasym/asymptotics.hpp"
#include "hasym/errors.hpp"
#include "hasym/recursions.hpp"

using namespace hasym;

TEST_CASE("A_n at order 0 and order 1", "[asymptotics]") {
  const AsymptoticModel m(Real(2), 3);
  const Real t = 1000;
  CHECK(m.A(0, t) == pow(4 * t, Real(0.25)));
  const Real q1 = Real(3) / 16 * log(4 * t) - Real(2) / 16;
  CHECK(abs(m.A(1, t) - pow(4 * t, Real(0.25)) * (1 + q1 / t)) < Real(1e-30));
  CHECK_THROWS_AS(m.A(4, t), DomainError);
  CHECK_THROWS_AS(m.A(1, Real(0)), DomainError);
  CHECK_THROWS_AS(AsymptoticModel(Real(0), -1), DomainError);
}

TEST_CASE("dA/dc matches a central difference", "[asymptotics]") {
  const AsymptoticModel m(Real("-3.1"), 5);
  const Real t = 50, d = Real(1e-10);
  const Real fd = (m.with_c(m.c() + d).A(5, t) - m.with_c(m.c() - d).A(5, t)) / (2 * d);
  CHECK(abs(fd - m.dA_dc(5, t)) < Real(1e-15));
}

TEST_CASE("G expansion: order-zero inverse and the closed form", "[asymptotics]") {
  const Real c = 4;
  const Real x = 100;
  CHECK(abs(eval_Ginv_asympt(c, 0, x) - (x + 3 * log(x) - c)) < Real(1e-30));
  // N = 1 term: -4 beta_2 (4/x)
  CHECK(abs(eval_G_asympt(c, 1, x) - (x - 3 * log(x) + c - 4 * Real(-21) / 16 * 4 / x)) < Real(1e-30));
}

TEST_CASE("fit_c recovers c from synthetic data", "[asymptotics]") {
  for (const Real& c0 : {Real("-18.6"), Real(0), Real("7.25")}) {
    const AsymptoticModel m(c0, 6);
    for (const Real& t : {Real(100), Real(1e4)}) {
      CHECK(abs(fit_c(6, t, m.A(6, t)) - c0) < Real(1e-10));
    }
  }
  CHECK_THROWS_AS(fit_c(3, Real("0.5"), Real(1)), DomainError);
}

TEST_CASE("fit_c_multi flags inconsistent data", "[asymptotics]") {
  const AsymptoticModel m(Real(1), 4);
  auto good = [&](const Real& t) { return m.A(4, t); };
  const auto r = fit_c_multi(good, 4, {Real(1e4), Real(1e3)}, Real(1e-10));
  CHECK(abs(r.c - 1) < Real(1e-12));
  CHECK(r.t_fit.front() < r.t_fit.back());
  auto bad = [&](const Real& t) { return m.A(4, t) * (1 + Real(1e-6)); };
  CHECK_THROWS_AS(fit_c_multi(bad, 4, {Real(1e2), Real(1e5)}, Real(1e-6)), AccuracyError);
}

TEST_CASE("remainder study on synthetic higher-order data", "[asymptotics]") {
  const AsymptoticModel m(Real("-5"), 4);
  const std::vector<Real> grid{Real(1e2), Real(1e3), Real(1e4), Real(1e5), Real(1e6)};
  const auto rep = remainder_study(m, sample_synthetic(m, 4, grid), 3);
  CHECK(rep.pass);
  CHECK(rep.summary.size() == 4);
  // the order-3 remainder is the q_4 term, so ratio = |q_4(c; ln 4t)| / (ln t)^4;
  // A_4 - A_3 cancels about 24 of the 34 digits at t = 1e6
  const auto q4 = gen_q(4).at(4);
  for (const auto& row : rep.rows) {
    if (row.n != 3) continue;
    const Real expected = abs(q4.eval(m.c(), log(4 * row.t))) / pow(log(row.t), 4);
    CHECK(abs(row.ratio / expected - 1) < Real(1e-8));
  }
}

TEST_CASE("remainder study gating", "[asymptotics]") {
  const AsymptoticModel m(Real(0), 3);
  auto s = sample_synthetic(m, 3, {Real(1e2), Real(1e4)});
  s.error[1] = remainder_scale(3, Real(1e4));  // 100% of the scale
  CHECK_THROWS_AS(remainder_study(m, s, 3), AccuracyError);
  StudyOptions lax;
  lax.gating_fraction = 2;
  CHECK_NOTHROW(remainder_study(m, s, 3, lax));
  CHECK_THROWS_AS(remainder_study(m, sample_synthetic(m, 3, {Real(1e3), Real(1e2)}), 3), DomainError);
}

TEST_CASE("shift law of the expansion", "[asymptotics]") {
  const AsymptoticModel m(Real("-18.6"), 4);
  const std::vector<Real> grid{Real(1e2), Real(1e3), Real(1e4), Real(1e5), Real(1e6)};
  for (const Real& s : {Real(1), Real(5), Real(-20)}) {
    for (int n = 0; n <= 4; ++n) {
      const Real near = shift_invariance_check(m, n, s, {grid.front()});
      const Real all = shift_invariance_check(m, n, s, grid);
      INFO("s = " << format_real(s, 3) << ", n = " << n);
      CHECK(all <= 10 * near);
    }
  }
}

TEST_CASE("Lambert expansion", "[asymptotics]") {
  const std::vector<Real> grid{Real(10), Real(1e2), Real(1e3), Real(1e4), Real(1e5)};
  for (int n = 0; n <= 3; ++n) {
    const auto rep = lambert_compare(n, grid);
    CHECK(rep.pass);
    CHECK(rep.max_residual <= Real(1e-12));
  }
  // order 1 by hand: x + ln x + ln x / x
  const Real x = 50;
  CHECK(abs(lambert_series(1, x) - (x + log(x) + log(x) / x)) < Real(1e-30));
  CHECK_THROWS_AS(lambert_compare(2, {Real(1), Real(10)}), DomainError);
}

TEST_CASE("report serialization", "[asymptotics]") {
  const AsymptoticModel m(Real(0), 3);
  const auto rep = remainder_study(m, sample_synthetic(m, 3, {Real(1e2), Real(1e3)}), 2);
  const auto j = nlohmann::json::parse(to_json(rep));
  CHECK(j["rows"].size() == 6);
  CHECK(j["pass"].get<bool>() == rep.pass);
  const auto csv = to_csv(rep);
  CHECK(csv.rfind("n,t,h_num,A_n,ratio\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  const auto lr = lambert_compare(1, {Real(10), Real(100)});
  CHECK(nlohmann::json::parse(to_json(lr))["rows"].size() == 2);
  CHECK(to_csv(lr).rfind("n,x,y_numeric,series,normalized,residual\n", 0) == 0);
}
