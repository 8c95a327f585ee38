#include "pavg/averages.hpp"

#include <cmath>

#include "pavg/errors.hpp"
#include "pavg/interval.hpp"

namespace pavg {

namespace {

void require_index(const PrimeTable& t, i64 n, i64 max_extra = 0) {
  if (n < 1 || n + max_extra > t.count())
    throw RangeError("index " + std::to_string(n) + " outside table of " +
                     std::to_string(t.count()) + " primes");
}

// pbar_i <= x, decided exactly. Fast path keeps everything in 128-bit
// integers; falls back to GMP when x's parts do not fit 64 bits.
class ExactLeProbe {
 public:
  ExactLeProbe(const PrimeTable& t, const Rational& x) : t_(t), x_(x) {
    fast_ = x.get_num().fits_ulong_p() && x.get_den().fits_ulong_p() && sgn(x) >= 0;
    if (fast_) {
      num_ = x.get_num().get_ui();
      den_ = x.get_den().get_ui();
    }
  }

  bool operator()(i64 i) const {
    const u64 s = t_.prefix_sum(i);
    if (fast_) {
      // S_i < 2^59 and den, num < 2^64, so the 128-bit products are exact.
      return static_cast<u128>(s) * den_ <= static_cast<u128>(i) * num_;
    }
    mpz_class lhs = mpz_class(static_cast<unsigned long>(s)) * x_.get_den();
    mpz_class rhs = mpz_class(static_cast<unsigned long>(i)) * x_.get_num();
    return lhs <= rhs;
  }

 private:
  const PrimeTable& t_;
  const Rational& x_;
  bool fast_ = false;
  u64 num_ = 0, den_ = 1;
};

// The table only answers pibar(x) when x <= pbar_count; beyond that the
// count would be cut off by the table edge.
void require_uncensored(const PrimeTable& t, const Rational& x, const std::string& shown) {
  const Rational pbar_last =
      make_rational_u64(t.prefix_sum(t.count()), static_cast<u64>(t.count()));
  if (pbar_last < x)
    throw RangeError("pibar(" + shown + ") would be censored by the table edge (pbar_" +
                     std::to_string(t.count()) + " = " + fraction_string(pbar_last) +
                     "); enlarge the table");
}

template <class LeProbe>
i64 count_below(const PrimeTable& t, const LeProbe& le) {
  if (!le(1)) return 0;
  // Largest i with pbar_i <= x; pbar is strictly increasing.
  i64 lo = 1, hi = t.count();
  while (lo < hi) {
    const i64 mid = lo + (hi - lo + 1) / 2;
    if (le(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

Rational avg_prime(const PrimeTable& t, i64 n) {
  require_index(t, n);
  return make_rational_u64(t.prefix_sum(n), static_cast<u64>(n));
}

Rational avg_gap(const PrimeTable& t, i64 n) {
  require_index(t, n, 1);
  // (n*p_{n+1} - S_n) / (n*(n+1)), positive since p_{n+1} > pbar_n.
  const u64 num = static_cast<u64>(n) * static_cast<u64>(t.nth_prime(n + 1)) - t.prefix_sum(n);
  return make_rational_u64(num, static_cast<u64>(n) * static_cast<u64>(n + 1));
}

i64 invert(const Rational& pbar_prev, const Rational& pbar_cur, i64 n) {
  if (n < 2) throw DomainError("inversion needs n >= 2");
  Rational r = make_rational(n) * pbar_cur - make_rational(n - 1) * pbar_prev;
  if (!is_integer(r))
    throw IntegrityError("inversion at n=" + std::to_string(n) + " gave non-integer " +
                         fraction_string(r) + "; inputs are not consecutive prime averages");
  return rational_to_i64(r);
}

Rational gaps_average(const PrimeTable& t, i64 n) {
  require_index(t, n, 1);
  return make_rational(t.nth_prime(n + 1) - 2, n);
}

std::pair<i64, Rational> gap_identity(const PrimeTable& t, i64 n) {
  if (n < 2) throw RangeError("gap identity needs n >= 2");
  require_index(t, n, 1);
  const Rational g_cur = avg_gap(t, n);
  const Rational g_prev = avg_gap(t, n - 1);
  Rational rhs = (g_cur + g_prev) + make_rational(n) * (g_cur - g_prev);
  rhs.canonicalize();
  return {t.prime_gap(n), rhs};
}

i64 avg_prime_count(const PrimeTable& t, const Rational& x, CountStats* stats) {
  require_uncensored(t, x, fraction_string(x));
  if (stats) stats->exact_probes += 1;
  return count_below(t, ExactLeProbe(t, x));
}

i64 avg_prime_count(const PrimeTable& t, double x, CountStats* stats) {
  if (!std::isfinite(x)) throw DomainError("pibar(x) requires a finite x");
  const Rational xr = rational_from_double(x);
  require_uncensored(t, xr, double_string(x));

  static constexpr mpfr_prec_t kLadder[] = {128, 256, 512};
  const IntervalValue xd = IntervalValue::exact(x);
  const ExactLeProbe exact(t, xr);

  auto le_probe = [&](i64 i) -> bool {
    IntervalValue pb = iv_from_u64(t.prefix_sum(i)) / iv_from_i64(i);
    Tri r = tri_le(pb, xd);
    if (r == Tri::Unknown) {
      for (mpfr_prec_t prec : kLadder) {
        if (stats) stats->escalations += 1;
        MpfrInterval pbm = mp_from_u64(t.prefix_sum(i), prec) / mp_from_i64(i, prec);
        r = tri_le(pbm, mp_from_rational(xr, prec));
        if (r != Tri::Unknown) break;
      }
    }
    if (r == Tri::Unknown) {
      // exact rung: always decides, x being an exact rational
      if (stats) stats->exact_probes += 1;
      return exact(i);
    }
    return r == Tri::True;
  };

  return count_below(t, le_probe);
}

}  // namespace pavg
