#include "pavg/interval.hpp"

#include <algorithm>
#include <limits>

namespace pavg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double next_down(double x) { return std::nextafter(x, -kInf); }
double next_up(double x) { return std::nextafter(x, kInf); }

// Basic +,-,*,/ are correctly rounded (error <= 0.5 ulp), so one step
// outward is enough. libm log/exp/log1p are faithful but not correctly
// rounded on this platform; two steps cover their documented <= 1-2 ulp.
double down1(double x) { return next_down(x); }
double up1(double x) { return next_up(x); }
double down2(double x) { return next_down(next_down(x)); }
double up2(double x) { return next_up(next_up(x)); }

IntervalValue invalid() {
  return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
}

constexpr double kExactMax = 9007199254740992.0;  // 2^53

}  // namespace

IntervalValue iv_from_i64(i64 v) {
  double d = static_cast<double>(v);
  if (v >= -static_cast<i64>(kExactMax) && v <= static_cast<i64>(kExactMax)) return {d, d};
  return {down1(d), up1(d)};
}

IntervalValue iv_from_u64(u64 v) {
  double d = static_cast<double>(v);
  if (v <= static_cast<u64>(kExactMax)) return {d, d};
  return {down1(d), up1(d)};
}

IntervalValue iv_from_rational(const Rational& q) {
  // mpq_get_d truncates toward zero; verify the bracket exactly and widen
  // until it provably contains q.
  double d = mpq_get_d(q.get_mpq_t());
  double lo = d, hi = d;
  while (std::isfinite(lo) && mpq_cmp(rational_from_double(lo).get_mpq_t(), q.get_mpq_t()) > 0)
    lo = next_down(lo);
  while (std::isfinite(hi) && mpq_cmp(rational_from_double(hi).get_mpq_t(), q.get_mpq_t()) < 0)
    hi = next_up(hi);
  return {lo, hi};
}

IntervalValue operator+(IntervalValue a, IntervalValue b) {
  return {down1(a.lo + b.lo), up1(a.hi + b.hi)};
}

IntervalValue operator-(IntervalValue a, IntervalValue b) {
  return {down1(a.lo - b.hi), up1(a.hi - b.lo)};
}

IntervalValue operator*(IntervalValue a, IntervalValue b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {down1(lo), up1(hi)};
}

IntervalValue operator/(IntervalValue a, IntervalValue b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) return {-kInf, kInf};  // divisor straddles zero
  double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {down1(lo), up1(hi)};
}

IntervalValue operator-(IntervalValue a) { return {-a.hi, -a.lo}; }

IntervalValue abs(IntervalValue a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return {-a.hi, -a.lo};
  return {0.0, std::max(-a.lo, a.hi)};
}

IntervalValue sqrt(IntervalValue a) {
  if (!(a.lo >= 0.0)) return invalid();
  // IEEE sqrt is correctly rounded.
  return {std::max(0.0, down1(std::sqrt(a.lo))), up1(std::sqrt(a.hi))};
}

IntervalValue log(IntervalValue a) {
  if (!(a.lo > 0.0)) return invalid();
  return {down2(std::log(a.lo)), up2(std::log(a.hi))};
}

IntervalValue log1p(IntervalValue a) {
  if (!(a.lo > -1.0)) return invalid();
  return {down2(std::log1p(a.lo)), up2(std::log1p(a.hi))};
}

IntervalValue exp(IntervalValue a) {
  return {std::max(0.0, down2(std::exp(a.lo))), up2(std::exp(a.hi))};
}

Cmp compare(IntervalValue lhs, IntervalValue rhs) {
  if (lhs.hi < rhs.lo) return Cmp::LessThan;
  if (lhs.lo >= rhs.hi) return Cmp::GreaterOrEqual;
  return Cmp::Unknown;  // overlapping or NaN endpoints
}

Tri tri_lt(IntervalValue a, IntervalValue b) {
  if (a.hi < b.lo) return Tri::True;
  if (a.lo >= b.hi) return Tri::False;
  return Tri::Unknown;
}

Tri tri_le(IntervalValue a, IntervalValue b) {
  if (a.hi <= b.lo) return Tri::True;
  if (a.lo > b.hi) return Tri::False;
  return Tri::Unknown;
}

MpfrInterval::MpfrInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

MpfrInterval::MpfrInterval(const MpfrInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

MpfrInterval::MpfrInterval(MpfrInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

MpfrInterval& MpfrInterval::operator=(MpfrInterval o) noexcept {
  prec_ = o.prec_;
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

MpfrInterval::~MpfrInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

MpfrInterval mp_from_i64(i64 v, mpfr_prec_t prec) {
  MpfrInterval r(prec);
  mpfr_set_sj(r.lo(), v, MPFR_RNDD);
  mpfr_set_sj(r.hi(), v, MPFR_RNDU);
  return r;
}

MpfrInterval mp_from_u64(u64 v, mpfr_prec_t prec) {
  MpfrInterval r(prec);
  mpfr_set_uj(r.lo(), v, MPFR_RNDD);
  mpfr_set_uj(r.hi(), v, MPFR_RNDU);
  return r;
}

MpfrInterval mp_from_rational(const Rational& q, mpfr_prec_t prec) {
  MpfrInterval r(prec);
  mpfr_set_q(r.lo(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

MpfrInterval operator+(const MpfrInterval& a, const MpfrInterval& b) {
  MpfrInterval r(std::max(a.prec(), b.prec()));
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

MpfrInterval operator-(const MpfrInterval& a, const MpfrInterval& b) {
  MpfrInterval r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

MpfrInterval operator*(const MpfrInterval& a, const MpfrInterval& b) {
  const mpfr_prec_t prec = std::max(a.prec(), b.prec());
  MpfrInterval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  // lower endpoint: min over endpoint products, each rounded down
  mpfr_mul(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  // upper endpoint: max over endpoint products, each rounded up
  mpfr_mul(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

MpfrInterval operator/(const MpfrInterval& a, const MpfrInterval& b) {
  const mpfr_prec_t prec = std::max(a.prec(), b.prec());
  MpfrInterval r(prec);
  if (mpfr_sgn(b.lo()) <= 0 && mpfr_sgn(b.hi()) >= 0) {
    mpfr_set_inf(r.lo(), -1);
    mpfr_set_inf(r.hi(), 1);
    return r;
  }
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_div(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_div(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

MpfrInterval operator-(const MpfrInterval& a) {
  MpfrInterval r(a.prec());
  mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

MpfrInterval abs(const MpfrInterval& a) {
  MpfrInterval r(a.prec());
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  mpfr_set_zero(r.lo(), 1);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

namespace {
using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
MpfrInterval monotone_unary(const MpfrInterval& a, MpfrUnary fn) {
  MpfrInterval r(a.prec());
  fn(r.lo(), a.lo(), MPFR_RNDD);
  fn(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}
}  // namespace

MpfrInterval sqrt(const MpfrInterval& a) { return monotone_unary(a, mpfr_sqrt); }
MpfrInterval log(const MpfrInterval& a) { return monotone_unary(a, mpfr_log); }
MpfrInterval log1p(const MpfrInterval& a) { return monotone_unary(a, mpfr_log1p); }
MpfrInterval exp(const MpfrInterval& a) { return monotone_unary(a, mpfr_exp); }

Tri tri_lt(const MpfrInterval& a, const MpfrInterval& b) {
  if (mpfr_nan_p(a.lo()) || mpfr_nan_p(a.hi()) || mpfr_nan_p(b.lo()) || mpfr_nan_p(b.hi()))
    return Tri::Unknown;
  if (mpfr_cmp(a.hi(), b.lo()) < 0) return Tri::True;
  if (mpfr_cmp(a.lo(), b.hi()) >= 0) return Tri::False;
  return Tri::Unknown;
}

Tri tri_le(const MpfrInterval& a, const MpfrInterval& b) {
  if (mpfr_nan_p(a.lo()) || mpfr_nan_p(a.hi()) || mpfr_nan_p(b.lo()) || mpfr_nan_p(b.hi()))
    return Tri::Unknown;
  if (mpfr_cmp(a.hi(), b.lo()) <= 0) return Tri::True;
  if (mpfr_cmp(a.lo(), b.hi()) > 0) return Tri::False;
  return Tri::Unknown;
}

}  // namespace pavg
