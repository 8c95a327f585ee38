#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <mpfr.h>

#include "pavg/rational.hpp"

namespace pavg {

// [lo, hi] enclosure of a real. Every operation rounds outward, so the
// true value of the expression always lies inside the result. Double
// endpoints are the fast first rung; MpfrInterval below provides the
// escalation rungs.
struct IntervalValue {
  double lo = 0.0;
  double hi = 0.0;

  static IntervalValue exact(double x) { return {x, x}; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return hi - lo; }
};

IntervalValue iv_from_i64(i64 v);
IntervalValue iv_from_u64(u64 v);
IntervalValue iv_from_rational(const Rational& q);

IntervalValue operator+(IntervalValue a, IntervalValue b);
IntervalValue operator-(IntervalValue a, IntervalValue b);
IntervalValue operator*(IntervalValue a, IntervalValue b);
IntervalValue operator/(IntervalValue a, IntervalValue b);
IntervalValue operator-(IntervalValue a);
IntervalValue abs(IntervalValue a);
IntervalValue sqrt(IntervalValue a);
IntervalValue log(IntervalValue a);
IntervalValue log1p(IntervalValue a);
IntervalValue exp(IntervalValue a);

// Decision of "lhs < rhs" on enclosures, conservative in both directions.
enum class Cmp { LessThan, GreaterOrEqual, Unknown };
Cmp compare(IntervalValue lhs, IntervalValue rhs);

// Three-valued predicate results; Unknown asks the caller to escalate.
enum class Tri { True, False, Unknown };

Tri tri_lt(IntervalValue a, IntervalValue b);   // a <  b
Tri tri_le(IntervalValue a, IntervalValue b);   // a <= b
inline Tri tri_gt(IntervalValue a, IntervalValue b) { return tri_lt(b, a); }
inline Tri tri_ge(IntervalValue a, IntervalValue b) { return tri_le(b, a); }

// Arbitrary-precision interval on MPFR with directed rounding. Both
// endpoints carry the same working precision.
class MpfrInterval {
 public:
  explicit MpfrInterval(mpfr_prec_t prec);
  MpfrInterval(const MpfrInterval& o);
  MpfrInterval(MpfrInterval&& o) noexcept;
  MpfrInterval& operator=(MpfrInterval o) noexcept;
  ~MpfrInterval();

  mpfr_prec_t prec() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  IntervalValue to_double() const { return {lo_double(), hi_double()}; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

MpfrInterval mp_from_i64(i64 v, mpfr_prec_t prec);
MpfrInterval mp_from_u64(u64 v, mpfr_prec_t prec);
MpfrInterval mp_from_rational(const Rational& q, mpfr_prec_t prec);

MpfrInterval operator+(const MpfrInterval& a, const MpfrInterval& b);
MpfrInterval operator-(const MpfrInterval& a, const MpfrInterval& b);
MpfrInterval operator*(const MpfrInterval& a, const MpfrInterval& b);
MpfrInterval operator/(const MpfrInterval& a, const MpfrInterval& b);
MpfrInterval operator-(const MpfrInterval& a);
MpfrInterval abs(const MpfrInterval& a);
MpfrInterval sqrt(const MpfrInterval& a);
MpfrInterval log(const MpfrInterval& a);
MpfrInterval log1p(const MpfrInterval& a);
MpfrInterval exp(const MpfrInterval& a);

Tri tri_lt(const MpfrInterval& a, const MpfrInterval& b);
Tri tri_le(const MpfrInterval& a, const MpfrInterval& b);
inline Tri tri_gt(const MpfrInterval& a, const MpfrInterval& b) { return tri_lt(b, a); }
inline Tri tri_ge(const MpfrInterval& a, const MpfrInterval& b) { return tri_le(b, a); }

// Uniform front ends over the two interval families so that claim
// predicates can be written once and instantiated per precision rung.
struct DoubleArith {
  using Real = IntervalValue;
  Real from_i64(i64 v) const { return iv_from_i64(v); }
  Real from_u64(u64 v) const { return iv_from_u64(v); }
  Real from_rational(const Rational& q) const { return iv_from_rational(q); }
  static Real add(Real a, Real b) { return a + b; }
  static Real sub(Real a, Real b) { return a - b; }
  static Real mul(Real a, Real b) { return a * b; }
  static Real div(Real a, Real b) { return a / b; }
  static Real abs_(Real a) { return abs(a); }
  static Real sqrt_(Real a) { return sqrt(a); }
  static Real log_(Real a) { return log(a); }
  static Real log1p_(Real a) { return log1p(a); }
  static Real exp_(Real a) { return exp(a); }
  static Tri lt(Real a, Real b) { return tri_lt(a, b); }
  static Tri le(Real a, Real b) { return tri_le(a, b); }
  static Tri gt(Real a, Real b) { return tri_gt(a, b); }
  static Tri ge(Real a, Real b) { return tri_ge(a, b); }
};

struct MpfrArith {
  mpfr_prec_t prec;
  using Real = MpfrInterval;
  Real from_i64(i64 v) const { return mp_from_i64(v, prec); }
  Real from_u64(u64 v) const { return mp_from_u64(v, prec); }
  Real from_rational(const Rational& q) const { return mp_from_rational(q, prec); }
  static Real add(const Real& a, const Real& b) { return a + b; }
  static Real sub(const Real& a, const Real& b) { return a - b; }
  static Real mul(const Real& a, const Real& b) { return a * b; }
  static Real div(const Real& a, const Real& b) { return a / b; }
  static Real abs_(const Real& a) { return abs(a); }
  static Real sqrt_(const Real& a) { return sqrt(a); }
  static Real log_(const Real& a) { return log(a); }
  static Real log1p_(const Real& a) { return log1p(a); }
  static Real exp_(const Real& a) { return exp(a); }
  static Tri lt(const Real& a, const Real& b) { return tri_lt(a, b); }
  static Tri le(const Real& a, const Real& b) { return tri_le(a, b); }
  static Tri gt(const Real& a, const Real& b) { return tri_gt(a, b); }
  static Tri ge(const Real& a, const Real& b) { return tri_ge(a, b); }
};

}  // namespace pavg
