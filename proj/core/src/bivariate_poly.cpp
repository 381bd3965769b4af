#include "hasym/bivariate_poly.hpp"

#include <algorithm>

namespace hasym {

BivariatePoly::BivariatePoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Key{0, 0}, constant);
}

BivariatePoly::BivariatePoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

BivariatePoly BivariatePoly::c() { return monomial(Rational(1), 1, 0); }
BivariatePoly BivariatePoly::z() { return monomial(Rational(1), 0, 1); }

BivariatePoly BivariatePoly::monomial(const Rational& coef, int c_pow, int z_pow) {
  BivariatePoly p;
  if (sgn(coef) != 0) p.terms_.emplace(Key{c_pow, z_pow}, coef);
  return p;
}

Rational BivariatePoly::coefficient(int c_pow, int z_pow) const {
  auto it = terms_.find(Key{c_pow, z_pow});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePoly::z_degree() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.second);
  return d;
}

int BivariatePoly::c_degree() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first);
  return d;
}

int BivariatePoly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

BivariatePoly BivariatePoly::derivative_c() const {
  Terms out;
  for (const auto& [k, v] : terms_) {
    if (k.first == 0) continue;
    out.emplace(Key{k.first - 1, k.second}, v * k.first);
  }
  return BivariatePoly(std::move(out));
}

Real BivariatePoly::eval(const Real& c, const Real& z) const {
  return NumericPoly(*this).eval(c, z);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [k, v] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [k, v] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, -v);
    if (!inserted) {
      it->second -= v;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= factor;
  return *this;
}

namespace {

// Integer coefficients over a common denominator, laid out densely.
struct ScaledDense {
  int c_deg = 0;
  int z_deg = 0;
  mpz_class denom{1};
  std::vector<std::pair<std::size_t, mpz_class>> entries;  // (c*(z_deg+1)+z, numerator)
};

ScaledDense scale_to_integers(const BivariatePoly& p) {
  ScaledDense s;
  s.c_deg = std::max(0, p.c_degree());
  s.z_deg = std::max(0, p.z_degree());
  for (const auto& [k, v] : p.terms()) mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), v.get_den_mpz_t());
  s.entries.reserve(p.terms().size());
  for (const auto& [k, v] : p.terms()) {
    mpz_class n = v.get_num() * (s.denom / v.get_den());
    s.entries.emplace_back(static_cast<std::size_t>(k.first) * (s.z_deg + 1) + k.second, std::move(n));
  }
  return s;
}

}  // namespace

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return BivariatePoly();
  const ScaledDense sa = scale_to_integers(a);
  const ScaledDense sb = scale_to_integers(b);
  const int zc = sa.z_deg + sb.z_deg;
  const int cc = sa.c_deg + sb.c_deg;
  std::vector<mpz_class> acc(static_cast<std::size_t>(cc + 1) * (zc + 1));
  for (const auto& [ia, na] : sa.entries) {
    const int ca = static_cast<int>(ia / (sa.z_deg + 1));
    const int za = static_cast<int>(ia % (sa.z_deg + 1));
    for (const auto& [ib, nb] : sb.entries) {
      const int cb = static_cast<int>(ib / (sb.z_deg + 1));
      const int zb = static_cast<int>(ib % (sb.z_deg + 1));
      mpz_class& slot = acc[static_cast<std::size_t>(ca + cb) * (zc + 1) + (za + zb)];
      mpz_addmul(slot.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    }
  }
  const mpz_class denom = sa.denom * sb.denom;
  BivariatePoly::Terms out;
  for (int i = 0; i <= cc; ++i) {
    for (int j = 0; j <= zc; ++j) {
      const mpz_class& n = acc[static_cast<std::size_t>(i) * (zc + 1) + j];
      if (sgn(n) == 0) continue;
      Rational q(n, denom);
      q.canonicalize();
      out.emplace_hint(out.end(), BivariatePoly::Key{i, j}, std::move(q));
    }
  }
  return BivariatePoly(std::move(out));
}

namespace {

std::string monomial_body(const Rational& magnitude, int c_pow, int z_pow) {
  std::vector<std::string> parts;
  const bool unit = magnitude == 1;
  if (!unit || (c_pow == 0 && z_pow == 0)) parts.push_back(magnitude.get_str());
  if (c_pow == 1) parts.emplace_back("c");
  if (c_pow > 1) parts.push_back("c^" + std::to_string(c_pow));
  if (z_pow == 1) parts.emplace_back("z");
  if (z_pow > 1) parts.push_back("z^" + std::to_string(z_pow));
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = (negative ? "-" : "") + body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace

std::string to_display_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  const int zmax = p.z_degree();
  std::string out;
  for (int j = zmax; j >= 0; --j) {
    std::vector<std::pair<int, Rational>> group;  // ascending c
    for (const auto& [k, v] : p.terms()) {
      if (k.second == j) group.emplace_back(k.first, v);
    }
    if (group.empty()) continue;
    if (j == 0 || group.size() == 1) {
      for (const auto& [ci, v] : group) append_signed(out, sgn(v) < 0, monomial_body(abs(v), ci, j));
      continue;
    }
    std::string inner;
    for (const auto& [ci, v] : group) append_signed(inner, sgn(v) < 0, monomial_body(abs(v), ci, 0));
    const std::string zs = j == 1 ? "z" : "z^" + std::to_string(j);
    append_signed(out, false, "(" + inner + ") " + zs);
  }
  return out;
}

NumericPoly::NumericPoly(const BivariatePoly& p) {
  if (p.is_zero()) return;
  by_c_.assign(static_cast<std::size_t>(p.c_degree()) + 1, {});
  const int zd = p.z_degree();
  for (auto& row : by_c_) row.assign(static_cast<std::size_t>(zd) + 1, Real(0));
  for (const auto& [k, v] : p.terms()) by_c_[k.first][k.second] = to_real(v);
}

namespace {

Real horner(const std::vector<Real>& coeffs, const Real& z) {
  Real acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

Real NumericPoly::eval(const Real& c, const Real& z) const {
  Real acc = 0;
  for (auto it = by_c_.rbegin(); it != by_c_.rend(); ++it) acc = acc * c + horner(*it, z);
  return acc;
}

Real NumericPoly::eval_dc(const Real& c, const Real& z) const {
  Real acc = 0;
  for (std::size_t i = by_c_.size(); i-- > 1;) acc = acc * c + horner(by_c_[i], z) * static_cast<int>(i);
  return acc;
}

}  // namespace hasym
