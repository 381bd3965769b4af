#include "hasym/recursions.hpp"

#include <limits>
#include <string>

#include "hasym/errors.hpp"

namespace hasym {

namespace {

void require_non_negative(int N, const char* who) {
  if (N < 0) throw DomainError(std::string(who) + ": N must be >= 0");
}

}  // namespace

const BivariatePoly& PolyFamily::at(int k) const {
  if (k < first_ || k > last()) {
    throw RangeError("PolyFamily::at: index " + std::to_string(k) + " outside [" +
                     std::to_string(first_) + ", " + std::to_string(last()) + "]");
  }
  return polys_[static_cast<std::size_t>(k - first_)];
}

AlphaSequence gen_alpha(int N) {
  require_non_negative(N, "gen_alpha");
  AlphaSequence a;
  a.values.reserve(static_cast<std::size_t>(N) + 1);
  a.values.emplace_back(1);
  for (int k = 0; k < N; ++k) {
    Rational conv(0);
    for (int j = 0; j <= k; ++j) conv += a.values[j] * a.values[k - j];
    a.values.push_back(Rational(2 * k + 3, 4) * conv);
  }
  return a;
}

BetaSequence gen_beta(int N) {
  require_non_negative(N, "gen_beta");
  BetaSequence b;
  auto& v = b.values;
  v.reserve(static_cast<std::size_t>(N) + 1);
  v.emplace_back(1);
  for (int n = 0; n < N; ++n) {
    const int m = n + 1;
    // sum over j + k = n + 1 with 0 <= j, k <= n
    Rational pairs(0);
    for (int j = 1; j <= n; ++j) pairs += v[j] * v[m - j];
    // sum over j + k + l = n + 1 with 0 <= j, k, l <= n
    Rational triples(0);
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n && j + k <= m; ++k) {
        const int l = m - j - k;
        if (l > n) continue;
        triples += v[j] * v[k] * v[l];
      }
    }
    v.push_back(Rational(4 * n - 3, 4) * v[n] + pairs - triples);
  }
  return b;
}

RationalSeries g_series(int N) {
  return RationalSeries(gen_alpha(N).values);
}

int ode_residual_order(int N) {
  if (N < 1) throw DomainError("ode_residual_order: N must be >= 1");
  const auto alpha = gen_alpha(N).values;
  // inner = 1 - 3/4 z g - z^2 g'   (degree <= N + 1)
  std::vector<Rational> inner(static_cast<std::size_t>(N) + 2);
  inner[0] = 1;
  for (int k = 0; k <= N; ++k) {
    inner[k + 1] -= Rational(3, 4) * alpha[k];
    if (k >= 1) inner[k + 1] -= alpha[k] * k;  // z^2 * k alpha_k z^{k-1}
  }
  std::vector<Rational> product(inner.size() + alpha.size() - 1);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) product[i + j] += inner[i] * alpha[j];
  }
  product[0] -= 1;
  for (std::size_t k = 0; k < product.size(); ++k) {
    if (sgn(product[k]) != 0) return static_cast<int>(k);
  }
  return std::numeric_limits<int>::max();
}

FamilyCache& FamilyCache::shared() {
  static FamilyCache cache;
  return cache;
}

void FamilyCache::extend_p(int N) {
  if (static_cast<int>(beta_.size()) < N + 2) beta_ = gen_beta(N + 1);
  if (p_.empty()) {
    p_.push_back(BivariatePoly::z() * Rational(3) - BivariatePoly::c());
    p_sums_.append(p_.back());
  }
  for (int n = static_cast<int>(p_.size()); n <= N; ++n) {
    // p_sums_ holds a_1..a_n = p_0..p_{n-1}
    BivariatePoly pn = p_sums_.sigma0(static_cast<std::size_t>(n)) * Rational(3);
    for (int k = 1; k <= n - 1; ++k) {
      const Rational w = pow4(k + 1) * beta_[k + 1] / k;
      pn += p_sums_.sigma(static_cast<unsigned>(k), static_cast<std::size_t>(n - k)) * w;
    }
    pn += BivariatePoly(pow4(n + 1) * beta_[n + 1] / n);
    p_.push_back(pn);
    p_sums_.append(p_.back());
  }
}

PPolyFamily FamilyCache::p(int N) {
  require_non_negative(N, "gen_p");
  std::lock_guard lock(mu_);
  extend_p(N);
  return PolyFamily(0, std::vector<BivariatePoly>(p_.begin(), p_.begin() + N + 1));
}

QPolyFamily FamilyCache::q(int N) {
  if (N < 1) throw DomainError("gen_q: N must be >= 1");
  std::lock_guard lock(mu_);
  extend_p(N - 1);
  const Rational quarter(1, 4);
  for (int k = static_cast<int>(q_.size()) + 1; k <= N; ++k) {
    BivariatePoly qk;
    const Rational scale = pow4(-k);
    for (int m = 1; m <= k; ++m) {
      qk += p_sums_.s(static_cast<std::size_t>(m), static_cast<std::size_t>(k)) * (scale * binom(quarter, static_cast<unsigned>(m)));
    }
    q_.push_back(std::move(qk));
  }
  return PolyFamily(1, std::vector<BivariatePoly>(q_.begin(), q_.begin() + N));
}

void FamilyCache::extend_lambert(int N) {
  if (lambert_.empty()) {
    lambert_.push_back(BivariatePoly::z());
    lambert_sums_.append(lambert_.back());
  }
  for (int k = static_cast<int>(lambert_.size()); k <= N; ++k) {
    lambert_.push_back(lambert_sums_.sigma0(static_cast<std::size_t>(k)));
    lambert_sums_.append(lambert_.back());
  }
}

LambertPolyFamily FamilyCache::lambert(int N) {
  require_non_negative(N, "gen_lambert_p");
  std::lock_guard lock(mu_);
  extend_lambert(N);
  return PolyFamily(0, std::vector<BivariatePoly>(lambert_.begin(), lambert_.begin() + N + 1));
}

PPolyFamily gen_p(int N) { return FamilyCache::shared().p(N); }
QPolyFamily gen_q(int N) { return FamilyCache::shared().q(N); }
LambertPolyFamily gen_lambert_p(int N) { return FamilyCache::shared().lambert(N); }

}  // namespace hasym
