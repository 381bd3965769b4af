#include <catch_amalgamated.hpp>

#include "hasym/bivariate_poly.hpp"
#include "hasym/errors.hpp"
#include "hasym/rational.hpp"
#include "hasym/series.hpp"

using namespace hasym;

namespace {

RationalSeries x_series(std::size_t order) { return RationalSeries::identity(order); }

// exp(x) - 1 from its Taylor coefficients 1/k!
RationalSeries expm1_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  Rational f(1);
  for (std::size_t k = 1; k <= order; ++k) {
    f /= static_cast<long>(k);
    c[k] = f;
  }
  return RationalSeries(c);
}

// a^m by repeated Cauchy products, written out directly
RationalSeries brute_pow(const RationalSeries& a, unsigned m) {
  const std::size_t n = a.order();
  std::vector<Rational> acc(n + 1);
  acc[0] = 1;
  for (unsigned p = 0; p < m; ++p) {
    std::vector<Rational> next(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; i + j <= n; ++j) next[i + j] += acc[i] * a[j];
    }
    acc = next;
  }
  return RationalSeries(acc);
}

}  // namespace

TEST_CASE("logarithm of 1 + x matches its Taylor coefficients", "[series]") {
  const auto ln = sigma0(x_series(12));
  CHECK(ln[0] == 0);
  for (std::size_t k = 1; k <= 12; ++k) {
    CHECK(ln[k] == Rational(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k)));
  }
}

TEST_CASE("ln(exp(x)) = x", "[series]") {
  const auto ln = sigma0(expm1_series(15));
  CHECK(ln[1] == 1);
  for (std::size_t k = 2; k <= 15; ++k) CHECK(ln[k] == 0);
}

TEST_CASE("(1 + x)^-m matches binomial coefficients", "[series]") {
  for (unsigned m = 1; m <= 5; ++m) {
    const auto s = sigma_m(x_series(10), m);
    CHECK(s[0] == 1);
    for (unsigned k = 1; k <= 10; ++k) CHECK(s[k] == binom(Rational(-static_cast<long>(m)), k));
  }
}

TEST_CASE("(exp(x))^-2 = exp(-2x)", "[series]") {
  const auto s = sigma_m(expm1_series(12), 2);
  Rational f(1);
  for (std::size_t k = 0; k <= 12; ++k) {
    if (k > 0) f = f * Rational(-2) / static_cast<long>(k);
    CHECK(s[k] == f);
  }
}

TEST_CASE("power sums agree with brute-force powers", "[series]") {
  const RationalSeries a({Rational(0), Rational(3, 4), Rational(-2), Rational(5, 7), Rational(1, 3), Rational(-9),
                          Rational(2, 11), Rational(1)});
  PowerSums<Rational> table(a);
  for (unsigned m = 0; m <= 7; ++m) {
    const auto brute = brute_pow(a, m);
    const auto fast = series_pow(a, m);
    for (std::size_t k = 0; k <= 7; ++k) {
      CHECK(fast[k] == brute[k]);
      CHECK(table.s(m, k) == brute[k]);
    }
  }
}

TEST_CASE("power sums extend incrementally without changing earlier entries", "[series]") {
  PowerSums<Rational> table;
  table.append(Rational(2));
  const Rational s11 = table.s(1, 1);
  table.append(Rational(-1, 3));
  table.append(Rational(5));
  CHECK(table.s(1, 1) == s11);
  CHECK(table.s(2, 2) == 4);
  CHECK(table.s(2, 3) == 2 * Rational(2) * Rational(-1, 3));
  CHECK_THROWS_AS(table.s(1, 4), RangeError);
}

TEST_CASE("reciprocal times series is one", "[series]") {
  const RationalSeries a({Rational(3), Rational(1, 2), Rational(-4), Rational(7, 3), Rational(0), Rational(1)});
  const auto prod = series_mul(a, series_reciprocal(a));
  CHECK(prod[0] == 1);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(prod[k] == 0);
  CHECK_THROWS_AS(series_reciprocal(x_series(3)), DomainError);
}

TEST_CASE("composition with exp coefficients gives exp(a) - 1 + 1", "[series]") {
  // f = exp series, a = x: composition is exp(x)
  auto f = expm1_series(9);
  std::vector<Rational> fc = f.coeffs();
  fc[0] = 1;
  const auto g = series_compose_coeffs(RationalSeries(fc), x_series(9));
  for (std::size_t k = 0; k <= 9; ++k) CHECK(g[k] == RationalSeries(fc)[k]);
}

TEST_CASE("series preconditions", "[series]") {
  CHECK_THROWS_AS(RationalSeries(std::vector<Rational>{}), DomainError);
  CHECK_THROWS_AS(sigma0(RationalSeries({Rational(1), Rational(1)})), DomainError);
  CHECK_THROWS_AS(sigma_m(x_series(3), 0), DomainError);
  CHECK_THROWS_AS(series_pow(RationalSeries({Rational(1)}), 2), DomainError);
}

TEST_CASE("bivariate polynomial arithmetic", "[series]") {
  const auto c = BivariatePoly::c();
  const auto z = BivariatePoly::z();
  const auto sq = (c + z) * (c + z);
  CHECK(sq.coefficient(2, 0) == 1);
  CHECK(sq.coefficient(1, 1) == 2);
  CHECK(sq.coefficient(0, 2) == 1);
  CHECK(sq.z_degree() == 2);
  CHECK(sq.c_degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(sq.derivative_c() == BivariatePoly::monomial(Rational(2), 1, 0) + BivariatePoly::monomial(Rational(2), 0, 1));
  CHECK(to_display_string(BivariatePoly::monomial(Rational(-27, 2), 0, 2) + BivariatePoly(Rational(-228))) ==
        "-27/2 z^2 - 228");
  const NumericPoly np(sq);
  CHECK(np.eval(Real(2), Real(3)) == 25);
  CHECK(np.eval_dc(Real(2), Real(3)) == 10);
}

TEST_CASE("rational helpers", "[series]") {
  CHECK(parse_rational("-14/4") == Rational(-7, 2));
  CHECK(make_rational("6", "-4") == Rational(-3, 2));
  CHECK(binom(Rational(1, 4), 2) == Rational(-3, 32));
  CHECK(pow4(-2) == Rational(1, 16));
  CHECK(to_real(Rational(1, 3)) == Real(1) / 3);
  CHECK_THROWS(parse_rational("1/0"));
}
