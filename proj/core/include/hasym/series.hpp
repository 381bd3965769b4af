#pragma once

// Truncated formal power series over an exact coefficient ring, and the
// power-sum polynomials s_{m,k}(a_1, ..., a_k) defined by
//
//   (a_1 x + a_2 x^2 + ...)^m = sum_{k >= m} s_{m,k}(a_1, ..., a_k) x^k.
//
// The coefficient ring T is either Rational or BivariatePoly. T must be
// default-constructible to zero, constructible from a Rational, closed under
// + - *, and multipliable by a Rational scalar.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hasym/errors.hpp"
#include "hasym/rational.hpp"

namespace hasym {

template <class T>
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

  /// coeffs[k] is the coefficient of x^k; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw DomainError("TruncatedSeries needs at least one coefficient");
    }
  }

  static TruncatedSeries constant(const T& value, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
  }

  /// The series x (zero when order = 0).
  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = T(Rational(1));
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const T& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const {
    std::vector<T> c(coeffs_.begin(),
                     coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    c.resize(order + 1);
    return TruncatedSeries(std::move(c));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<T> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

namespace detail {

template <class T>
void require_zero_constant(const TruncatedSeries<T>& a, const char* who) {
  if (!is_zero(a[0])) {
    throw DomainError(std::string(who) + ": series must have zero constant term");
  }
}

}  // namespace detail

/// Incrementally built table of s_{m,k}(a_1, ..., a_k).
///
/// Appending a_n fills column k = n with the recursive rule
///   s_{1,n} = a_n,  s_{m,n} = sum_{j=m-1}^{n-1} s_{m-1,j} a_{n-j}.
/// Entries already computed never change, so the table can be extended
/// while a recursion is still producing its own arguments.
template <class T>
class PowerSums {
 public:
  PowerSums() : a_(1), columns_(1) {}

  explicit PowerSums(const TruncatedSeries<T>& a) : PowerSums() {
    detail::require_zero_constant(a, "PowerSums");
    for (std::size_t k = 1; k <= a.order(); ++k) append(a[k]);
  }

  /// Number of known arguments a_1..a_n.
  std::size_t size() const { return a_.size() - 1; }

  void append(const T& next) {
    a_.push_back(next);
    const std::size_t n = size();
    std::vector<T> column(n + 1);
    column[1] = next;
    for (std::size_t m = 2; m <= n; ++m) {
      T acc{};
      for (std::size_t j = m - 1; j <= n - 1; ++j) {
        const T& prev = columns_[j][m - 1];
        if (is_zero(prev) || is_zero(a_[n - j])) continue;
        acc = acc + prev * a_[n - j];
      }
      column[m] = std::move(acc);
    }
    columns_.push_back(std::move(column));
  }

  /// s_{m,k}; requires k <= size().
  T s(std::size_t m, std::size_t k) const {
    if (k > size()) throw RangeError("PowerSums::s: k beyond known arguments");
    if (m == 0) return k == 0 ? T(Rational(1)) : T{};
    if (m > k) return T{};
    return columns_[k][m];
  }

  /// sigma^0_k = sum_{j=1}^{k} (-1)^{j+1}/j s_{j,k}: coefficient k of ln(1 + a).
  T sigma0(std::size_t k) const {
    T acc{};
    for (std::size_t j = 1; j <= k; ++j) {
      const Rational w(j % 2 == 1 ? 1 : -1, static_cast<unsigned long>(j));
      acc = acc + s(j, k) * w;
    }
    return acc;
  }

  /// sigma^m_k = sum_{j=0}^{k} binom(-m, j) s_{j,k}: coefficient k of (1 + a)^{-m}.
  T sigma(unsigned m, std::size_t k) const {
    if (m == 0) throw DomainError("sigma^m requires m >= 1");
    const Rational minus_m(-static_cast<long>(m));
    T acc{};
    Rational b(1);  // binom(-m, j), updated incrementally
    for (std::size_t j = 0; j <= k; ++j) {
      if (j > 0) {
        b *= (minus_m - Rational(static_cast<long>(j) - 1));
        b /= Rational(static_cast<long>(j));
      }
      acc = acc + s(j, k) * b;
    }
    return acc;
  }

 private:
  std::vector<T> a_;                     // a_[0] unused
  std::vector<std::vector<T>> columns_;  // columns_[k][m] = s_{m,k}
};

template <class T>
TruncatedSeries<T> series_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<T> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> series_sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<T> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> series_scale(const TruncatedSeries<T>& a, const Rational& factor) {
  std::vector<T> c(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) c[k] = a[k] * factor;
  return TruncatedSeries<T>(std::move(c));
}

/// Cauchy product truncated to min(a.order, b.order).
template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<T> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (is_zero(b[j])) continue;
      c[i + j] = c[i + j] + a[i] * b[j];
    }
  }
  return TruncatedSeries<T>(std::move(c));
}

/// Multiplicative inverse; needs an invertible constant term.
inline RationalSeries series_reciprocal(const RationalSeries& a) {
  if (is_zero(a[0])) throw DomainError("series_reciprocal: zero constant term");
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return RationalSeries(std::move(b));
}

/// a^m with coefficients s_{m,k}(a_1..a_k); result has a's order.
template <class T>
TruncatedSeries<T> series_pow(const TruncatedSeries<T>& a, unsigned m) {
  detail::require_zero_constant(a, "series_pow");
  const std::size_t n = a.order();
  std::vector<T> row(n + 1);  // s_{0,k} = delta_{0,k}
  row[0] = T(Rational(1));
  for (unsigned p = 0; p < m; ++p) {
    // s_{p+1,k} = sum_{j=p}^{k-1} s_{p,j} a_{k-j}
    std::vector<T> next(n + 1);
    for (std::size_t k = p + 1; k <= n; ++k) {
      T acc{};
      for (std::size_t j = p; j <= k - 1; ++j) {
        if (is_zero(row[j]) || is_zero(a[k - j])) continue;
        acc = acc + row[j] * a[k - j];
      }
      next[k] = std::move(acc);
    }
    row = std::move(next);
    if (p + 1 > n) break;  // every remaining coefficient is zero
  }
  if (m > n) std::fill(row.begin(), row.end(), T{});
  if (m == 0) row[0] = T(Rational(1));
  return TruncatedSeries<T>(std::move(row));
}

/// sum_m f_m a^m, i.e. g_k = sum_{m=0}^{k} f_m s_{m,k}(a_1..a_k).
template <class T>
TruncatedSeries<T> series_compose_coeffs(const TruncatedSeries<T>& f, const TruncatedSeries<T>& a) {
  detail::require_zero_constant(a, "series_compose_coeffs");
  const std::size_t n = std::min(f.order(), a.order());
  PowerSums<T> table(a.truncated(n));
  std::vector<T> g(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    T acc{};
    for (std::size_t m = 0; m <= k; ++m) {
      if (is_zero(f[m])) continue;
      acc = acc + f[m] * table.s(m, k);
    }
    g[k] = std::move(acc);
  }
  return TruncatedSeries<T>(std::move(g));
}

/// ln(1 + a): coefficient k is sigma^0_k(a_1..a_k), coefficient 0 is 0.
template <class T>
TruncatedSeries<T> sigma0(const TruncatedSeries<T>& a) {
  PowerSums<T> table(a);
  std::vector<T> c(a.order() + 1);
  for (std::size_t k = 1; k <= a.order(); ++k) c[k] = table.sigma0(k);
  return TruncatedSeries<T>(std::move(c));
}

/// (1 + a)^{-m} for m >= 1: coefficient 0 is 1, coefficient k is sigma^m_k.
template <class T>
TruncatedSeries<T> sigma_m(const TruncatedSeries<T>& a, unsigned m) {
  if (m == 0) throw DomainError("sigma_m: m must be >= 1 (use sigma0 for the logarithm)");
  PowerSums<T> table(a);
  std::vector<T> c(a.order() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) c[k] = table.sigma(m, k);
  return TruncatedSeries<T>(std::move(c));
}

}  // namespace hasym
