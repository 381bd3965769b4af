#include <catch_amalgamated.hpp>

#include <thread>

#include "hasym/errors.hpp"
#include "hasym/recursions.hpp"

using namespace hasym;

namespace {

struct Term {
  Rational coef;
  int c_pow;
  int z_pow;
};

BivariatePoly poly(std::initializer_list<Term> terms) {
  BivariatePoly p;
  for (const auto& t : terms) p += BivariatePoly::monomial(t.coef, t.c_pow, t.z_pow);
  return p;
}

Rational R(long n, long d = 1) { return Rational(n, d); }

// beta from its defining quadratic/cubic recursion, written independently
std::vector<Rational> beta_by_recursion(int N) {
  std::vector<Rational> b{Rational(1)};
  for (int n = 0; n < N; ++n) {
    Rational next = (Rational(n) - Rational(3, 4)) * b[n];
    for (int j = 1; j <= n; ++j) next += b[j] * b[n + 1 - j];
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        const int l = n + 1 - j - k;
        if (l < 0 || l > n) continue;
        next -= b[j] * b[k] * b[l];
      }
    }
    b.push_back(next);
  }
  return b;
}

}  // namespace

TEST_CASE("alpha and beta reproduce the displayed values", "[recursions]") {
  const auto b = gen_beta(4);
  CHECK(b.values == std::vector<Rational>{R(1), R(-3, 4), R(-21, 16), R(-165, 32), R(-7245, 256)});
  const auto a = gen_alpha(3);
  CHECK(a.values == std::vector<Rational>{R(1), R(3, 4), R(15, 8), R(483, 64)});
  CHECK(gen_alpha(0).values == std::vector<Rational>{R(1)});
}

TEST_CASE("beta agrees with its quadratic-cubic recursion", "[recursions]") {
  const auto b = gen_beta(25);
  const auto oracle = beta_by_recursion(25);
  for (int k = 0; k <= 25; ++k) CHECK(b[static_cast<std::size_t>(k)] == oracle[static_cast<std::size_t>(k)]);
}

TEST_CASE("alpha solves the formal ODE coefficientwise", "[recursions]") {
  // (1 - 3/4 z g - z^2 g') g = 1, checked with plain loops
  const int N = 20;
  const auto a = gen_alpha(N);
  std::vector<Rational> left(N + 1);  // 1 - 3/4 z g - z^2 g'
  left[0] = 1;
  for (int k = 1; k <= N; ++k) {
    left[k] = -Rational(3, 4) * a[k - 1];
    if (k >= 2) left[k] -= Rational(k - 1) * a[k - 1];
  }
  for (int k = 0; k <= N; ++k) {
    Rational acc(0);
    for (int j = 0; j <= k; ++j) acc += left[j] * a[k - j];
    CHECK(acc == (k == 0 ? 1 : 0));
  }
}

TEST_CASE("beta_5 from an independently computed reciprocal", "[recursions]") {
  const auto a = gen_alpha(5);
  std::vector<Rational> b(6);
  b[0] = 1;
  for (int k = 1; k <= 5; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc;
  }
  CHECK(gen_beta(5)[5] == b[5]);
}

TEST_CASE("reciprocity of alpha and beta through order 30", "[recursions]") {
  const auto a = gen_alpha(30);
  const auto b = gen_beta(30);
  for (int k = 0; k <= 30; ++k) {
    Rational acc(0);
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    CHECK(acc == (k == 0 ? 1 : 0));
  }
}

TEST_CASE("p_1..p_3 match the displayed polynomials", "[recursions]") {
  const auto p = gen_p(3);
  CHECK(p.at(0) == poly({{R(3), 0, 1}, {R(-1), 1, 0}}));
  CHECK(p.at(1) == poly({{R(9), 0, 1}, {R(-21), 0, 0}, {R(-3), 1, 0}}));
  CHECK(p.at(2) == poly({{R(-27, 2), 0, 2}, {R(90), 0, 1}, {R(9), 1, 1}, {R(-228), 0, 0}, {R(-30), 1, 0},
                         {R(-3, 2), 2, 0}}));
  CHECK(p.at(3) == poly({{R(27), 0, 3},
                         {R(-621, 2), 0, 2},
                         {R(-27), 1, 2},
                         {R(1638), 0, 1},
                         {R(207), 1, 1},
                         {R(9), 2, 1},
                         {R(-3540), 0, 0},
                         {R(-546), 1, 0},
                         {R(-69, 2), 2, 0},
                         {R(-1), 3, 0}}));
}

TEST_CASE("q_1..q_3 match the displayed polynomials", "[recursions]") {
  const auto q = gen_q(3);
  CHECK(q.first() == 1);
  CHECK(q.at(1) == poly({{R(3, 16), 0, 1}, {R(-1, 16), 1, 0}}));
  CHECK(q.at(2) == poly({{R(-27, 512), 0, 2}, {R(9, 64), 0, 1}, {R(9, 256), 1, 1}, {R(-21, 64), 0, 0},
                         {R(-3, 64), 1, 0}, {R(-3, 512), 2, 0}}));
  CHECK(q.at(3) == poly({{R(189, 8192), 0, 3},
                         {R(-135, 1024), 0, 2},
                         {R(-189, 8192), 1, 2},
                         {R(549, 1024), 0, 1},
                         {R(45, 512), 1, 1},
                         {R(63, 8192), 2, 1},
                         {R(-57, 64), 0, 0},
                         {R(-183, 1024), 1, 0},
                         {R(-15, 1024), 2, 0},
                         {R(-7, 8192), 3, 0}}));
  CHECK_THROWS_AS(gen_q(0), DomainError);
}

TEST_CASE("Lambert polynomials match the displayed ones", "[recursions]") {
  const auto pt = gen_lambert_p(3);
  CHECK(pt.at(0) == poly({{R(1), 0, 1}}));
  CHECK(pt.at(1) == poly({{R(1), 0, 1}}));
  CHECK(pt.at(2) == poly({{R(1), 0, 1}, {R(-1, 2), 0, 2}}));
  CHECK(pt.at(3) == poly({{R(1), 0, 1}, {R(-3, 2), 0, 2}, {R(1, 3), 0, 3}}));
}

TEST_CASE("formal solution residual order", "[recursions]") {
  for (int N = 1; N <= 15; ++N) CHECK(ode_residual_order(N) >= N + 1);
  CHECK_THROWS_AS(ode_residual_order(0), DomainError);
}

TEST_CASE("z-degree bounds of p_n and q_n", "[recursions]") {
  const auto p = gen_p(20);
  const auto q = gen_q(20);
  for (int n = 1; n <= 20; ++n) {
    CHECK(p.at(n).z_degree() <= n);
    CHECK(q.at(n).z_degree() <= n);
  }
  const auto pt = gen_lambert_p(12);
  for (int k = 1; k <= 12; ++k) CHECK(pt.at(k).z_degree() == k);
}

TEST_CASE("p_n inverts the G expansion to the claimed order", "[recursions]") {
  // With y = x + d, G(y) - x = d - 3 ln y + c - 4 sum beta_{k+1}/k (4/y)^k must
  // be O((ln x / x)^(n+1)). d is summed directly so that nothing of size x
  // enters the cancellation; the grid stops where the remainder nears rounding.
  const Real c("0.7");
  const auto p = gen_p(6);
  const auto beta = gen_beta(61);
  for (int n = 0; n <= 5; ++n) {
    Real first = 0, last = 0;
    for (int e = 2; e <= 5; ++e) {
      const Real x = pow(Real(10), e);
      const Real lx = log(x);
      Real d = p.at(0).eval(c, lx);
      for (int k = 1; k <= n; ++k) d += p.at(k).eval(c, lx) / pow(x, k);
      const Real y = x + d;
      Real tail = 0;
      for (int k = 1; k <= 60; ++k) tail += to_real(beta[static_cast<std::size_t>(k + 1)]) / k * pow(4 / y, k);
      const Real residual = d - 3 * (lx + log1p(d / x)) + c - 4 * tail;
      const Real r = abs(residual) / pow(lx / x, n + 1);
      if (e == 2) first = r;
      last = r;
    }
    INFO("n = " << n << " first " << format_real(first, 4) << " last " << format_real(last, 4));
    CHECK(last <= 10 * first);
  }
}

TEST_CASE("q_k follows from p_n through the fourth root", "[recursions]") {
  // (4t)^(1/4) (1 + sum q_k / t^k) against (G^{-1}_{n+1}(4t))^(1/4), both
  // divided by (4t)^(1/4) so only O(1) quantities are compared.
  const Real c("-2.5");
  const auto p = gen_p(7);
  const auto q = gen_q(6);
  for (int n = 0; n <= 5; ++n) {
    Real first = 0, last = 0;
    for (int e = 2; e <= 5; ++e) {
      const Real t = pow(Real(10), e);
      const Real x = 4 * t, lx = log(x);
      Real d = p.at(0).eval(c, lx);
      for (int k = 1; k <= n + 1; ++k) d += p.at(k).eval(c, lx) / pow(x, k);
      const Real via_p = pow(1 + d / x, Real(0.25));
      Real via_q = 1;
      for (int k = 1; k <= n; ++k) via_q += q.at(k).eval(c, lx) / pow(t, k);
      const Real r = abs(via_q - via_p) / pow(log(t) / t, n + 1);
      if (e == 2) first = r;
      last = r;
    }
    INFO("n = " << n << " first " << format_real(first, 4) << " last " << format_real(last, 4));
    CHECK(last <= 10 * first);
  }
}

TEST_CASE("family cache extends consistently and is thread safe", "[recursions]") {
  const auto small = gen_p(4);
  std::vector<PPolyFamily> results(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&results, i] { results[static_cast<std::size_t>(i)] = FamilyCache::shared().p(8 + i); });
  }
  for (auto& t : threads) t.join();
  for (const auto& fam : results) {
    for (int k = 0; k <= 4; ++k) CHECK(fam.at(k) == small.at(k));
  }
  CHECK(results[3].last() == 11);
  CHECK_THROWS_AS(gen_p(-1), DomainError);
}
