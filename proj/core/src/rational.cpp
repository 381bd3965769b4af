#include "hasym/rational.hpp"

#include <ios>
#include <stdexcept>

#include "hasym/errors.hpp"

namespace hasym {

std::string format_real(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw DomainError("not a rational number: '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw DomainError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Rational make_rational(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
    throw DomainError("not an integer pair: '" + num + "', '" + den + "'");
  }
  if (sgn(d) == 0) throw DomainError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string numerator_string(const Rational& q) { return q.get_num().get_str(10); }
std::string denominator_string(const Rational& q) { return q.get_den().get_str(10); }

namespace {

Real mpz_to_real_exact_122(const mpz_class& v) {
  // v < 2^123: split into two 64-bit limbs, each exactly representable.
  const mpz_class lo_mask = (mpz_class(1) << 64) - 1;
  const mpz_class hi = v >> 64;
  const mpz_class lo = v & lo_mask;
  Real r = Real(static_cast<unsigned long long>(mpz_get_ui(hi.get_mpz_t())));
  r = ldexp(r, 64);
  return r + Real(static_cast<unsigned long long>(mpz_get_ui(lo.get_mpz_t())));
}

}  // namespace

Real to_real(const Rational& q) {
  const int s = sgn(q);
  if (s == 0) return Real(0);
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long shift = 120 - nb + db;  // quotient gets 120..121 bits
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // sticky bit so the single rounding below is correct
  quot <<= 1;
  if (sgn(rem) != 0) quot += 1;
  ++shift;
  Real r = ldexp(mpz_to_real_exact_122(quot), static_cast<int>(-shift));
  return s < 0 ? -r : r;
}

Rational binom(const Rational& r, unsigned j) {
  Rational acc(1);
  for (unsigned i = 0; i < j; ++i) {
    acc *= (r - Rational(static_cast<long>(i)));
    acc /= Rational(static_cast<long>(i) + 1);
  }
  return acc;
}

Rational pow4(int k) {
  mpz_class p(1);
  p <<= static_cast<mp_bitcnt_t>(2 * (k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

}  // namespace hasym
