#include "pavg/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>

#include <mpfr.h>

namespace pavg {

Rational make_rational(i64 num, i64 den) {
  if (den == 0) throw DomainError("rational denominator must be nonzero");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

Rational make_rational_u64(u64 num, u64 den) {
  if (den == 0) throw DomainError("rational denominator must be nonzero");
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert non-finite double to rational");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);  // exact
  return q;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::string s(text);
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.' || c == '-' || c == '+'))
      fail();

  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos && dot != std::string::npos) fail();

  try {
    if (slash != std::string::npos) {
      std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      if (num.empty() || den.empty()) fail();
      Rational q(mpz_class(num), mpz_class(den));
      if (q.get_den() == 0) fail();
      q.canonicalize();
      return q;
    }
    if (dot != std::string::npos) {
      std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
      if (frac.empty()) fail();
      for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      bool neg = !intpart.empty() && intpart[0] == '-';
      if (!intpart.empty() && (intpart[0] == '+' || intpart[0] == '-')) intpart.erase(0, 1);
      if (intpart.empty()) intpart = "0";
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      mpz_class value = mpz_class(intpart) * scale + mpz_class(frac);
      if (neg) value = -value;
      Rational q(value, scale);
      q.canonicalize();
      return q;
    }
    return Rational(mpz_class(s));
  } catch (const std::invalid_argument&) {
    fail();
  }
  return Rational();  // unreachable
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

i64 rational_to_i64(const Rational& q) {
  if (!is_integer(q)) throw IntegrityError("expected an integral rational, got " + fraction_string(q));
  const mpz_class& n = q.get_num();
  if (!n.fits_slong_p()) throw IntegrityError("integral rational does not fit in 64 bits");
  return static_cast<i64>(n.get_si());
}

std::string fraction_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int significant_digits) {
  if (is_integer(q)) return q.get_num().get_str();
  // Evaluate at enough precision that %.*Rg rounding is exact for the
  // requested digit count.
  mpfr_t v;
  mpfr_init2(v, 256);
  mpfr_set_q(v, q.get_mpq_t(), MPFR_RNDN);
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", significant_digits, v);
  mpfr_clear(v);
  return std::string(buf);
}

std::string double_string(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int cmp_products(u64 a, u64 b, u64 c, u64 d) {
  const u128 lhs = static_cast<u128>(a) * b;
  const u128 rhs = static_cast<u128>(c) * d;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

bool checked_mul_u64(u64 a, u64 b, u64* out) { return !__builtin_mul_overflow(a, b, out); }

}  // namespace pavg
